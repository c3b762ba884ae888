//! Named lower bounds for the three operators.
//!
//! Each operator enters only through the constants `M` (cap on the Fourier
//! density) and `L` (Lipschitz bound), which depend on `|Ω|` and the second
//! moment `I`. Everything else is the radial minimisation problem.

use crate::error::{BoundsError, Result};
use crate::minimizer::{
    dimension_constants, scaled_mass, second_term_deficit, sigma4_exact, sigma_asymptotic,
    sigma_exact, sigma_liyau, sigma_melas_lb, MinimizationInput,
};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OperatorKind {
    #[serde(rename = "laplace")]
    DirichletLaplacian,
    #[serde(rename = "stokes")]
    Stokes,
    #[serde(rename = "bilaplace")]
    DirichletBilaplacian,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 3] = [
        OperatorKind::DirichletLaplacian,
        OperatorKind::Stokes,
        OperatorKind::DirichletBilaplacian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::DirichletLaplacian => "laplace",
            OperatorKind::Stokes => "stokes",
            OperatorKind::DirichletBilaplacian => "bilaplace",
        }
    }

    /// Coefficient `c` in the linear term `(c/48)(|Ω|/I) m`: `n` for the
    /// Laplacian, `n - 1` for Stokes.
    fn linear_coefficient(self, n: usize) -> Option<f64> {
        match self {
            OperatorKind::DirichletLaplacian => Some(n as f64),
            OperatorKind::Stokes => Some(n as f64 - 1.0),
            OperatorKind::DirichletBilaplacian => None,
        }
    }

    /// Multiplicity factor on `|Ω|` in `M`.
    fn volume_factor(self, n: usize) -> f64 {
        match self {
            OperatorKind::Stokes => n as f64 - 1.0,
            _ => 1.0,
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "laplace" | "laplacian" | "dirichlet_laplacian" => Ok(OperatorKind::DirichletLaplacian),
            "stokes" => Ok(OperatorKind::Stokes),
            "bilaplace" | "bilaplacian" | "dirichlet_bilaplacian" => {
                Ok(OperatorKind::DirichletBilaplacian)
            }
            other => Err(BoundsError::Parse(format!("unknown operator `{other}`"))),
        }
    }
}

fn unsupported(kind: OperatorKind, n: usize, reason: &str) -> BoundsError {
    BoundsError::Unsupported {
        operator: kind.name().into(),
        n,
        reason: reason.into(),
    }
}

/// `|Ω|` and the second moment `I` about the centroid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeometrySummary {
    pub n: usize,
    pub volume: f64,
    pub inertia: f64,
}

impl GeometrySummary {
    /// Rejects summaries violating `I ≥ n |Ω|^{1+2/n} / ((n+2) ω_n^{2/n})`
    /// (the ball minimises the second moment at fixed volume).
    pub fn new(n: usize, volume: f64, inertia: f64) -> Result<Self> {
        if !(volume.is_finite() && volume > 0.0 && inertia.is_finite() && inertia > 0.0) {
            return Err(BoundsError::InvalidInput(format!(
                "volume and inertia must be positive, got {volume} and {inertia}"
            )));
        }
        let floor = inertia_floor(n, volume)?;
        if inertia < floor * (1.0 - 1e-12) {
            return Err(BoundsError::InvalidInput(format!(
                "inertia {inertia} is below the ball value {floor} for volume {volume}"
            )));
        }
        Ok(Self { n, volume, inertia })
    }

    /// Same summary for the dilated domain `aΩ`.
    pub fn scaled(&self, a: f64) -> Self {
        let n = self.n as i32;
        Self {
            n: self.n,
            volume: self.volume * a.powi(n),
            inertia: self.inertia * a.powi(n + 2),
        }
    }
}

/// Second moment of the ball with the given volume.
pub fn inertia_floor(n: usize, volume: f64) -> Result<f64> {
    let dc = dimension_constants(n)?;
    let nf = n as f64;
    Ok(nf * volume.powf(1.0 + 2.0 / nf) / ((nf + 2.0) * dc.omega.powf(2.0 / nf)))
}

/// `(M, L)` for the operator on the given domain.
///
/// Laplacian and bi-Laplacian: `M = (2π)^{-n}|Ω|`, `L = 2(2π)^{-n} sqrt(|Ω| I)`.
/// Stokes: `M` gains a factor `n - 1` and `L` a factor `sqrt(n(n-1))`.
pub fn ml_constants(kind: OperatorKind, geom: &GeometrySummary) -> (f64, f64) {
    let n = geom.n;
    let base = (2.0 * PI).powi(-(n as i32));
    let cap = base * kind.volume_factor(n) * geom.volume;
    let mut slope = 2.0 * base * (geom.volume * geom.inertia).sqrt();
    if kind == OperatorKind::Stokes {
        slope *= (n as f64 * (n as f64 - 1.0)).sqrt();
    }
    (cap, slope)
}

pub fn minimization_input(
    kind: OperatorKind,
    geom: &GeometrySummary,
    m: f64,
) -> Result<MinimizationInput> {
    let (cap, slope) = ml_constants(kind, geom);
    MinimizationInput::new(geom.n, cap, slope, m)
}

/// Leading-order bound `n/(n+2) ((2π)^n / (ω_n |Ω|))^{2/n} m^{1+2/n}`, with
/// `(n-1)|Ω|` in place of `|Ω|` for Stokes.
pub fn bound_liyau(kind: OperatorKind, geom: &GeometrySummary, m: f64) -> Result<f64> {
    if kind == OperatorKind::DirichletBilaplacian {
        return Err(unsupported(kind, geom.n, "no Li-Yau form for the fourth-order operator"));
    }
    sigma_liyau(&minimization_input(kind, geom, m)?)
}

/// Published `β` in the two-term theorem.
pub fn theorem_beta(kind: OperatorKind, n: usize) -> Result<f64> {
    use OperatorKind::*;
    match (kind, n) {
        (DirichletLaplacian, 2) => Ok(119.0 / 120.0),
        (DirichletLaplacian, 3) => Ok(0.986),
        (DirichletLaplacian, 4) => Ok(0.983),
        (Stokes, 2) => Ok(239.0 / 240.0),
        (Stokes, 3) => Ok(0.986),
        (Stokes, 4) => Ok(0.978),
        (DirichletBilaplacian, 2) => Ok(12095.0 / 12096.0),
        (DirichletBilaplacian, _) => Err(unsupported(kind, n, "theorem form is two-dimensional only")),
        _ => Err(unsupported(kind, n, "theorem form covers n = 2, 3, 4")),
    }
}

/// Sharper `β` obtained directly from the floor on `m_*`.
///
/// `n = 3`: `β = 1 - (8/5)(11·2^{1/3}/48) m₀^{-2/3}`;
/// `n = 4`: `β = 1 - (10/7)(49√5/200) m₀^{-1/2}`. For `n = 2` the theorem
/// value is already exact.
pub fn lemma_beta(kind: OperatorKind, n: usize) -> Result<f64> {
    if kind == OperatorKind::DirichletBilaplacian || n == 2 {
        return theorem_beta(kind, n);
    }
    let m0 = m_star_floor(kind, n)?;
    match n {
        3 => Ok(1.0 - 1.6 * (11.0 * 2f64.cbrt() / 48.0) * m0.powf(-2.0 / 3.0)),
        4 => Ok(1.0 - 10.0 / 7.0 * (49.0 * 5f64.sqrt() / 200.0) / m0.sqrt()),
        _ => Err(unsupported(kind, n, "theorem form covers n = 2, 3, 4")),
    }
}

/// Two-term theorem bound for `n = 2, 3, 4` (bi-Laplacian: `n = 2`).
pub fn bound_theorem_234(kind: OperatorKind, geom: &GeometrySummary, m: f64) -> Result<f64> {
    let beta = theorem_beta(kind, geom.n)?;
    match kind.linear_coefficient(geom.n) {
        Some(c) => {
            Ok(bound_liyau(kind, geom, m)? + c / 48.0 * beta * geom.volume / geom.inertia * m)
        }
        None => Ok(16.0 * PI * PI * m.powi(3) / (3.0 * geom.volume * geom.volume)
            + PI / (3.0 * geom.inertia) * beta * m * m),
    }
}

/// Floor `m₀` on `m_*` implied by the ball inequality for `I`.
///
/// The bi-Laplacian shares the Laplacian constants and therefore its floor.
pub fn m_star_floor(kind: OperatorKind, n: usize) -> Result<f64> {
    let dc = dimension_constants(n)?;
    let nf = n as f64;
    let head = (nf + 1.0) * (4.0 * PI).powi(n as i32) / (dc.omega * dc.omega);
    Ok(match kind {
        OperatorKind::Stokes => {
            head / (nf - 1.0) * (nf * nf / ((nf - 1.0) * (nf + 2.0))).powf(nf / 2.0)
        }
        _ => head * (nf / (nf + 2.0)).powf(nf / 2.0),
    })
}

/// Weyl asymptote for the `k`-th eigenvalue.
pub fn weyl_asymptote(kind: OperatorKind, geom: &GeometrySummary, k: f64) -> Result<f64> {
    if kind == OperatorKind::DirichletBilaplacian {
        return Err(unsupported(kind, geom.n, "Weyl asymptote is provided for second-order operators"));
    }
    let dc = dimension_constants(geom.n)?;
    let nf = geom.n as f64;
    let vol = kind.volume_factor(geom.n) * geom.volume;
    Ok(((2.0 * PI).powf(nf) / (dc.omega * vol)).powf(2.0 / nf) * k.powf(2.0 / nf))
}

/// All bounds for one `(operator, geometry, m)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub operator: OperatorKind,
    pub n: usize,
    pub m: f64,
    pub m_star: f64,
    pub liyau: Option<f64>,
    pub melas: Option<f64>,
    pub exact: f64,
    pub asymptotic: Option<f64>,
    pub theorem_form: Option<f64>,
    /// Residual `ε` in `exact = liyau + (c/48)(|Ω|/I) m (1 - ε)`.
    pub epsilon: Option<f64>,
    pub degenerate: bool,
}

pub fn bound_exact(kind: OperatorKind, geom: &GeometrySummary, m: f64) -> Result<BoundReport> {
    let input = minimization_input(kind, geom, m)?;
    let ms = scaled_mass(&input)?;
    let theorem_form = bound_theorem_234(kind, geom, m).ok();
    let report = match kind.linear_coefficient(geom.n) {
        Some(c) => {
            let exact = sigma_exact(&input)?;
            let liyau = sigma_liyau(&input)?;
            let linear = c / 48.0 * geom.volume / geom.inertia * m;
            BoundReport {
                operator: kind,
                n: geom.n,
                m,
                m_star: ms.value(),
                liyau: Some(liyau),
                melas: Some(sigma_melas_lb(&input)?),
                exact,
                asymptotic: Some(sigma_asymptotic(&input)?),
                theorem_form,
                epsilon: Some(if ms.is_degenerate() {
                    1.0 - (exact - liyau) / linear
                } else {
                    second_term_deficit(geom.n, ms.value())?
                }),
                degenerate: ms.is_degenerate(),
            }
        }
        None => BoundReport {
            operator: kind,
            n: geom.n,
            m,
            m_star: ms.value(),
            liyau: None,
            melas: None,
            exact: sigma4_exact(&input)?,
            asymptotic: None,
            theorem_form,
            epsilon: None,
            degenerate: ms.is_degenerate(),
        },
    };
    Ok(report)
}
