//! The gradient-constrained radial minimisation problem.
//!
//! Minimise `σ_n ∫ r^{n-1+p} F(r) dr` over nonincreasing radial profiles with
//! `0 ≤ F ≤ M`, `-F' ≤ L` and `σ_n ∫ r^{n-1} F(r) dr = m`. The minimiser is
//! the plateau-ramp profile `Φ_s`, equal to `M` on `[0, s]` and falling with
//! slope `-L` to zero at `s + M/L`. The plateau length is fixed by the mass
//! through `(t+1)^{n+1} - t^{n+1} = m_*`, `s = tM/L`.
//!
//! `p = 2` gives the Laplace and Stokes bounds, `p = 4` the bi-Laplacian.

mod roots;

pub use roots::{
    closed_form_root, power_gap, root_biquadratic, root_bracket, root_cardano, root_quadratic,
    solve_t,
};

use crate::error::{BoundsError, Result};
use serde::Serialize;
use std::f64::consts::PI;

/// Unit-ball volume `ω_n` and unit-sphere area `σ_n = n ω_n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DimensionConstants {
    pub n: usize,
    pub omega: f64,
    pub sigma: f64,
}

/// `ω_n = π^{n/2} / Γ(n/2 + 1)`, evaluated by the recurrence
/// `ω_n = (2π/n) ω_{n-2}` from `ω_0 = 1`, `ω_1 = 2`.
pub fn dimension_constants(n: usize) -> Result<DimensionConstants> {
    if n < 2 {
        return Err(BoundsError::Dimension(n));
    }
    let mut omega = if n.is_multiple_of(2) { 1.0 } else { 2.0 };
    let mut k = if n.is_multiple_of(2) { 2 } else { 3 };
    while k <= n {
        omega *= 2.0 * PI / k as f64;
        k += 2;
    }
    Ok(DimensionConstants {
        n,
        omega,
        sigma: n as f64 * omega,
    })
}

/// Dimension, cap `M`, slope bound `L` and mass `m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MinimizationInput {
    pub n: usize,
    pub cap: f64,
    pub slope: f64,
    pub mass: f64,
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(BoundsError::InvalidInput(format!("{name} must be positive and finite, got {v}")))
    }
}

impl MinimizationInput {
    pub fn new(n: usize, cap: f64, slope: f64, mass: f64) -> Result<Self> {
        let input = Self { n, cap, slope, mass };
        input.validate()?;
        Ok(input)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(BoundsError::Dimension(self.n));
        }
        positive("M", self.cap)?;
        positive("L", self.slope)?;
        positive("m", self.mass)
    }

    fn constants(&self) -> Result<DimensionConstants> {
        self.validate()?;
        dimension_constants(self.n)
    }
}

/// Dimensionless mass `m_* = m (n+1) L^n / (ω_n M^{n+1})`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct ScaledMass(pub f64);

impl ScaledMass {
    pub fn value(self) -> f64 {
        self.0
    }

    /// Below 1 the minimiser has no plateau.
    pub fn is_degenerate(self) -> bool {
        self.0 < 1.0
    }
}

pub fn scaled_mass(input: &MinimizationInput) -> Result<ScaledMass> {
    let dc = input.constants()?;
    let n = input.n as f64;
    let ratio = input.slope / input.cap;
    Ok(ScaledMass(
        input.mass * (n + 1.0) / (dc.omega * input.cap) * ratio.powi(input.n as i32),
    ))
}

/// The optimal radial profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinimizerProfile {
    /// `M` on `[0, s]`, `M - L(r - s)` on `[s, s + M/L]`, zero beyond.
    PlateauRamp { cap: f64, slope: f64, plateau: f64, t: f64 },
    /// `h - L r` on `[0, h/L]`, zero beyond, `h ≤ M`.
    Triangular { cap: f64, slope: f64, height: f64 },
}

impl MinimizerProfile {
    pub fn plateau_ramp(cap: f64, slope: f64, t: f64) -> Self {
        MinimizerProfile::PlateauRamp {
            cap,
            slope,
            plateau: t * cap / slope,
            t,
        }
    }

    /// Minimiser for the given input: plateau-ramp when `m_* ≥ 1`, otherwise
    /// the triangle with `h = M m_*^{1/(n+1)}`.
    pub fn for_input(input: &MinimizationInput) -> Result<Self> {
        let ms = scaled_mass(input)?;
        if ms.is_degenerate() {
            Ok(MinimizerProfile::Triangular {
                cap: input.cap,
                slope: input.slope,
                height: input.cap * ms.0.powf(1.0 / (input.n as f64 + 1.0)),
            })
        } else {
            Ok(Self::plateau_ramp(input.cap, input.slope, solve_t(input.n, ms.0)?))
        }
    }

    pub fn value(&self, r: f64) -> f64 {
        match *self {
            MinimizerProfile::PlateauRamp { cap, slope, plateau, .. } => {
                if r <= plateau {
                    cap
                } else {
                    (cap - slope * (r - plateau)).max(0.0)
                }
            }
            MinimizerProfile::Triangular { slope, height, .. } => (height - slope * r).max(0.0),
        }
    }

    /// Right end of the support.
    pub fn support_end(&self) -> f64 {
        match *self {
            MinimizerProfile::PlateauRamp { cap, slope, plateau, .. } => plateau + cap / slope,
            MinimizerProfile::Triangular { slope, height, .. } => height / slope,
        }
    }

    /// Radius where the ramp starts (0 for the triangle).
    pub fn kink(&self) -> f64 {
        match *self {
            MinimizerProfile::PlateauRamp { plateau, .. } => plateau,
            MinimizerProfile::Triangular { .. } => 0.0,
        }
    }

    /// `∫₀^∞ r^γ F(r) dr` in closed form.
    pub fn moment(&self, gamma: f64) -> f64 {
        match *self {
            MinimizerProfile::PlateauRamp { cap, slope, t, .. } => {
                profile_moment(gamma, cap, slope, t)
            }
            MinimizerProfile::Triangular { slope, height, .. } => {
                height * (height / slope).powf(gamma + 1.0) / ((gamma + 1.0) * (gamma + 2.0))
            }
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, MinimizerProfile::Triangular { .. })
    }
}

/// `∫₀^∞ r^γ Φ_s(r) dr = M^{γ+2} / ((γ+1)(γ+2) L^{γ+1}) · ((t+1)^{γ+2} - t^{γ+2})`.
pub fn profile_moment(gamma: f64, cap: f64, slope: f64, t: f64) -> f64 {
    let g1 = gamma + 1.0;
    cap * (cap / slope).powf(g1) / (g1 * (gamma + 2.0)) * power_gap(t, gamma + 2.0)
}

/// Exact minimum of `σ_n ∫ r^{n-1+p} F dr` for moment power `p`.
fn sigma_power(input: &MinimizationInput, p: usize) -> Result<f64> {
    let dc = input.constants()?;
    let profile = MinimizerProfile::for_input(input)?;
    Ok(dc.sigma * profile.moment((input.n - 1 + p) as f64))
}

/// `Σ_{M,L}(m)`: exact minimum of the second moment.
///
/// For `m_* ≥ 1` this is
/// `σ_n M^{n+3} / ((n+2)(n+3) L^{n+2}) · ((t+1)^{n+3} - t^{n+3})`; below that
/// the triangular profile is used.
pub fn sigma_exact(input: &MinimizationInput) -> Result<f64> {
    sigma_power(input, 2)
}

/// `Σ⁴_{M,L}(m)`: exact minimum of the fourth moment (bi-Laplacian).
pub fn sigma4_exact(input: &MinimizationInput) -> Result<f64> {
    sigma_power(input, 4)
}

/// Minimum without the slope constraint: `n/(n+2) (ω_n M)^{-2/n} m^{1+2/n}`.
pub fn sigma_liyau(input: &MinimizationInput) -> Result<f64> {
    let dc = input.constants()?;
    let n = input.n as f64;
    Ok(n / (n + 2.0)
        * (1.0 / (dc.omega * input.cap)).powf(2.0 / n)
        * input.mass.powf(1.0 + 2.0 / n))
}

/// The older linear correction: `Σ_M(m) + M² m / (6 (n+2) L²)`.
pub fn sigma_melas_lb(input: &MinimizationInput) -> Result<f64> {
    let n = input.n as f64;
    let ratio = input.cap / input.slope;
    Ok(sigma_liyau(input)? + ratio * ratio * input.mass / (6.0 * (n + 2.0)))
}

/// Three-term expansion `Σ₀(m)` of `Σ_{M,L}(m)` in descending powers of `m`.
pub fn sigma_asymptotic(input: &MinimizationInput) -> Result<f64> {
    let dc = input.constants()?;
    let n = input.n as f64;
    let ratio = input.cap / input.slope;
    let r2 = ratio * ratio;
    let second = n / 12.0 * r2 * input.mass;
    let third = n * (n - 1.0) * (3.0 * n + 2.0) / 1440.0
        * r2
        * r2
        * (input.cap * dc.omega).powf(2.0 / n)
        * input.mass.powf(1.0 - 2.0 / n);
    Ok(sigma_liyau(input)? + second - third)
}

/// Partial sums (1 to 3 terms) of the large-`m_*` expansion of
/// `η = t + 1/2`:
/// `x^{1/n} - (n-1)/24 x^{-1/n} + (n-1)(n-3)(2n+1)/5760 x^{-3/n}`,
/// `x = m_*/(n+1)`. The remainder is `O(x^{-5/n})`.
pub fn eta_expansion(n: usize, m_star: f64, terms: usize) -> Result<f64> {
    if n < 2 {
        return Err(BoundsError::Dimension(n));
    }
    if !(1..=3).contains(&terms) {
        return Err(BoundsError::InvalidInput(format!("terms must be 1, 2 or 3, got {terms}")));
    }
    if !(m_star >= 1.0) {
        return Err(BoundsError::ScaledMassBelowOne(m_star));
    }
    let nf = n as f64;
    let x = m_star / (nf + 1.0);
    let coeffs = [
        (1.0, 1.0 / nf),
        (-(nf - 1.0) / 24.0, -1.0 / nf),
        ((nf - 1.0) * (nf - 3.0) * (2.0 * nf + 1.0) / 5760.0, -3.0 / nf),
    ];
    Ok(coeffs[..terms].iter().map(|(c, e)| c * x.powf(*e)).sum())
}

/// `((η+½)^p - (η-½)^p) / (p η^{p-1}) - 1`, smallest terms first.
fn odd_tail(p: usize, from: usize, eta: f64) -> f64 {
    let mut binom = 1.0;
    let mut terms = Vec::with_capacity(p / 2);
    for j in 1..=p {
        binom = binom * (p + 1 - j) as f64 / j as f64;
        if j >= from && j % 2 == 1 {
            terms.push(2.0 / p as f64 * binom * eta * (2.0 * eta).powi(-(j as i32)));
        }
    }
    terms.iter().rev().sum()
}

/// `(1 + w)^a - 1 - a w`.
fn power_remainder(a: f64, w: f64) -> f64 {
    if w > 0.125 {
        return (a * w.ln_1p()).exp_m1() - a * w;
    }
    let mut coeff = a * (a - 1.0) / 2.0;
    let mut term = coeff * w * w;
    let mut terms = vec![term];
    for k in 3..60i32 {
        coeff *= (a - (k - 1) as f64) / k as f64;
        term = coeff * w.powi(k);
        if term == 0.0 || term.abs() < 1e-18 * terms[0].abs() {
            break;
        }
        terms.push(term);
    }
    terms.iter().rev().sum()
}

/// Relative shortfall `ε` of the second term:
/// `Σ_{M,L}(m) = Σ_M(m) + (n/12)(M/L)² m (1 - ε)`.
///
/// `ε` depends on `m_*` alone. It is evaluated from `η = t + ½` with the
/// order-`η⁻²` parts of both binomial differences cancelled symbolically.
pub fn second_term_deficit(n: usize, m_star: f64) -> Result<f64> {
    let eta = solve_t(n, m_star)? + 0.5;
    let nf = n as f64;
    let a = 1.0 + 2.0 / nf;
    let w = odd_tail(n + 1, 3, eta);
    let w_rest = odd_tail(n + 1, 5, eta);
    let b_rest = odd_tail(n + 3, 5, eta);
    let numer = (nf + 2.0) * w - 12.0 * eta * eta * (b_rest - a * w_rest - power_remainder(a, w));
    Ok(numer / ((nf + 2.0) * (1.0 + w)))
}

/// Two-term lower bound `Σ_M(m) + (n/12) β (M/L)² m` used for `n = 2, 3, 4`.
pub fn sigma_beta_lb(input: &MinimizationInput, beta: f64) -> Result<f64> {
    if !(2..=4).contains(&input.n) {
        return Err(BoundsError::Unsupported {
            operator: "two-term bound".into(),
            n: input.n,
            reason: "only n = 2, 3, 4 are covered".into(),
        });
    }
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(BoundsError::InvalidInput(format!("beta must lie in (0, 1], got {beta}")));
    }
    let ratio = input.cap / input.slope;
    Ok(sigma_liyau(input)? + input.n as f64 / 12.0 * beta * ratio * ratio * input.mass)
}
