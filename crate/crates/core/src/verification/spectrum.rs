//! Exact Dirichlet spectra of boxes and externally supplied spectra.

use crate::error::{BoundsError, Result};
use crate::minimizer::dimension_constants;
use crate::operator::OperatorKind;
use serde::Serialize;
use std::f64::consts::PI;
use std::io::Read;

/// Upper limit on enumerated lattice points per attempt.
const ENUMERATION_BUDGET: usize = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumSource {
    ExactBox,
    External,
}

/// Nondecreasing, strictly positive eigenvalues.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumSample {
    pub eigenvalues: Vec<f64>,
    pub operator: OperatorKind,
    pub source: SpectrumSource,
}

impl SpectrumSample {
    pub fn new(eigenvalues: Vec<f64>, operator: OperatorKind, source: SpectrumSource) -> Result<Self> {
        if let Some(bad) = eigenvalues.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            return Err(BoundsError::InvalidInput(format!("eigenvalue {bad} is not positive")));
        }
        if eigenvalues.windows(2).any(|w| w[1] < w[0]) {
            return Err(BoundsError::InvalidInput("eigenvalues must be nondecreasing".into()));
        }
        Ok(Self { eigenvalues, operator, source })
    }

    /// Reads one eigenvalue per record (first column). A non-numeric first
    /// row is treated as a header. Values are sorted on load.
    pub fn from_csv<R: Read>(reader: R, operator: OperatorKind) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut values = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(|e| BoundsError::Parse(e.to_string()))?;
            let Some(field) = rec.get(0) else { continue };
            if field.is_empty() {
                continue;
            }
            match field.parse::<f64>() {
                Ok(v) => values.push(v),
                Err(_) if i == 0 => continue,
                Err(_) => {
                    return Err(BoundsError::Parse(format!("line {}: `{field}` is not a number", i + 1)))
                }
            }
        }
        values.sort_by(f64::total_cmp);
        Self::new(values, operator, SpectrumSource::External)
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `S_m = μ_1 + … + μ_m` for `m = 1..=len`.
    pub fn partial_sums(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .scan(0.0, |acc, v| {
                *acc += v;
                Some(*acc)
            })
            .collect()
    }
}

/// First `m` Dirichlet eigenvalues `π² Σ (k_i / a_i)²` of the box with the
/// given sides, with multiplicity.
pub fn box_spectrum(sides: &[f64], m: usize) -> Result<SpectrumSample> {
    box_spectrum_with_workers(sides, m, 1)
}

/// As [`box_spectrum`], splitting the enumeration over the first lattice
/// coordinate across `workers` threads. Output does not depend on `workers`.
pub fn box_spectrum_with_workers(sides: &[f64], m: usize, workers: usize) -> Result<SpectrumSample> {
    let n = sides.len();
    if n < 2 {
        return Err(BoundsError::Dimension(n));
    }
    if m == 0 {
        return Err(BoundsError::InvalidInput("m must be at least 1".into()));
    }
    if sides.iter().any(|s| !(s.is_finite() && *s > 0.0)) {
        return Err(BoundsError::DegenerateShape(format!("box sides must be positive: {sides:?}")));
    }
    let weights: Vec<f64> = sides.iter().map(|a| PI * PI / (a * a)).collect();
    let volume: f64 = sides.iter().product();
    let omega = dimension_constants(n)?.omega;
    // Weyl: N(Λ) ≈ ω_n |Ω| Λ^{n/2} / (2π)^n
    let mut cutoff = 4.0 * PI * PI * (m as f64 / (omega * volume)).powf(2.0 / n as f64) * 1.5;
    loop {
        let mut values = enumerate(&weights, cutoff, workers.max(1))?;
        if values.len() >= m {
            values.sort_by(f64::total_cmp);
            values.truncate(m);
            return SpectrumSample::new(values, OperatorKind::DirichletLaplacian, SpectrumSource::ExactBox);
        }
        cutoff *= 2.0;
    }
}

/// All lattice values `Σ w_i k_i²`, `k_i ≥ 1`, not exceeding `cutoff`.
fn enumerate(weights: &[f64], cutoff: f64, workers: usize) -> Result<Vec<f64>> {
    let tail_min: f64 = weights[1..].iter().sum();
    let first_max = ((cutoff - tail_min).max(0.0) / weights[0]).sqrt().floor() as u64;
    if first_max == 0 {
        return Ok(Vec::new());
    }
    let per_worker = ENUMERATION_BUDGET / workers;
    let chunk = |start: u64| -> Result<Vec<f64>> {
        let mut out = Vec::new();
        let mut k = start;
        while k <= first_max {
            let v = weights[0] * (k * k) as f64;
            descend(&weights[1..], v, cutoff, &mut out, per_worker)?;
            k += workers as u64;
        }
        Ok(out)
    };
    if workers == 1 {
        return chunk(1);
    }
    let parts: Vec<Result<Vec<f64>>> = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=workers as u64).map(|w| s.spawn(move || chunk(w))).collect();
        handles.into_iter().map(|h| h.join().expect("enumeration worker panicked")).collect()
    });
    let mut all = Vec::new();
    for p in parts {
        all.extend(p?);
    }
    Ok(all)
}

fn descend(weights: &[f64], acc: f64, cutoff: f64, out: &mut Vec<f64>, budget: usize) -> Result<()> {
    let Some((w, rest)) = weights.split_first() else {
        out.push(acc);
        if out.len() > budget {
            return Err(BoundsError::EnumerationBudget(ENUMERATION_BUDGET));
        }
        return Ok(());
    };
    let rest_min: f64 = rest.iter().sum();
    let mut k: u64 = 1;
    loop {
        let v = acc + w * (k * k) as f64;
        if v + rest_min > cutoff {
            break;
        }
        descend(rest, v, cutoff, out, budget)?;
        k += 1;
    }
    Ok(())
}
