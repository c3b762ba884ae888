//! End-to-end ordering audit of the bounds against each other and, for
//! boxes under the Dirichlet Laplacian, against the exact spectrum.

use super::spectrum::{box_spectrum, SpectrumSample};
use crate::error::{BoundsError, Result};
use crate::geometry::DomainShape;
use crate::operator::{bound_exact, OperatorKind};
use serde::Serialize;

/// Relative slack allowed for rounding in the comparisons.
const ORDER_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRow {
    pub m: usize,
    pub spectrum_sum: Option<f64>,
    pub exact: f64,
    pub theorem: Option<f64>,
    pub liyau: Option<f64>,
    /// Spectrum sum minus the exact bound, or, without a spectrum, the exact
    /// bound minus the largest weaker bound.
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditViolation {
    pub m: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub operator: OperatorKind,
    pub spectral: bool,
    pub rows: Vec<AuditRow>,
    pub min_slack: f64,
    pub argmin: usize,
    pub violations: Vec<AuditViolation>,
}

impl AuditReport {
    /// First violation as an error.
    pub fn ensure_ok(&self) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(BoundsError::Violation {
                m: v.m,
                detail: v.detail.clone(),
            }),
        }
    }
}

/// Audits `m = 1..=m_max`. Boxes under the Laplacian are checked against
/// their exact spectrum; other combinations only against the bound chain.
pub fn audit(kind: OperatorKind, shape: &DomainShape, m_max: usize) -> Result<AuditReport> {
    let spectrum = match (kind, shape) {
        (OperatorKind::DirichletLaplacian, DomainShape::Box(b)) => Some(box_spectrum(&b.sides, m_max)?),
        _ => None,
    };
    audit_with_spectrum(kind, shape, m_max, spectrum.as_ref())
}

pub fn audit_with_spectrum(
    kind: OperatorKind,
    shape: &DomainShape,
    m_max: usize,
    spectrum: Option<&SpectrumSample>,
) -> Result<AuditReport> {
    if m_max == 0 {
        return Err(BoundsError::InvalidInput("m_max must be at least 1".into()));
    }
    let geom = shape.summary()?;
    if kind == OperatorKind::DirichletBilaplacian && geom.n != 2 {
        return Err(BoundsError::Unsupported {
            operator: kind.name().into(),
            n: geom.n,
            reason: "theorem form is two-dimensional only".into(),
        });
    }
    let sums = match spectrum {
        Some(s) => {
            if s.len() < m_max {
                return Err(BoundsError::InvalidInput(format!(
                    "spectrum has {} eigenvalues, audit needs {m_max}",
                    s.len()
                )));
            }
            Some(s.partial_sums())
        }
        None => None,
    };

    let below = |lo: f64, hi: f64| lo <= hi + ORDER_TOL * hi.abs().max(lo.abs());
    let mut rows = Vec::with_capacity(m_max);
    let mut violations = Vec::new();
    for m in 1..=m_max {
        let r = bound_exact(kind, &geom, m as f64)?;
        let spectrum_sum = sums.as_ref().map(|s| s[m - 1]);
        let mut fail = |detail: String| violations.push(AuditViolation { m, detail });

        if let Some(s) = spectrum_sum {
            if !below(r.exact, s) {
                fail(format!("spectrum sum {s} < exact bound {}", r.exact));
            }
        }
        if let Some(t) = r.theorem_form {
            if !below(t, r.exact) {
                fail(format!("exact bound {} < theorem bound {t}", r.exact));
            }
        }
        if let Some(l) = r.liyau {
            let upper = r.theorem_form.unwrap_or(r.exact);
            if !below(l, upper) {
                fail(format!("Li-Yau bound {l} exceeds {upper}"));
            }
        }
        let slack = match spectrum_sum {
            Some(s) => s - r.exact,
            None => r.exact - r.theorem_form.into_iter().chain(r.liyau).fold(f64::NEG_INFINITY, f64::max),
        };
        rows.push(AuditRow {
            m,
            spectrum_sum,
            exact: r.exact,
            theorem: r.theorem_form,
            liyau: r.liyau,
            slack,
        });
    }
    let (argmin, min_slack) = rows
        .iter()
        .map(|r| (r.m, r.slack))
        .fold((0, f64::INFINITY), |best, cur| if cur.1 < best.1 { cur } else { best });
    Ok(AuditReport {
        operator: kind,
        spectral: sums.is_some(),
        rows,
        min_slack,
        argmin,
        violations,
    })
}
