//! Roots of `(t+1)^{n+1} - t^{n+1} = m_*`.
//!
//! The left-hand side is increasing and convex on `t >= 0` and maps `[0, ∞)`
//! onto `[1, ∞)`. The general solver is a bracketed Newton iteration; the
//! closed forms for `n = 2, 3, 4` are kept alongside as cross-checks.

use crate::error::{BoundsError, Result};

const REL_TOL: f64 = 4.0 * f64::EPSILON;
const MAX_ITER: usize = 200;

/// `(t+1)^q - t^q` for `t >= 0` and real `q > 0`, without cancellation.
///
/// For `t > 0` this is `t^q · expm1(q · ln(1 + 1/t))`.
pub fn power_gap(t: f64, q: f64) -> f64 {
    if t == 0.0 {
        return 1.0;
    }
    t.powf(q) * (q * (1.0 / t).ln_1p()).exp_m1()
}

/// Bracket `[max(0, q - 1), q]` with `q = (m_*/(n+1))^{1/n}`.
///
/// Upper end: every coefficient of the polynomial in `η = t + 1/2` is
/// positive, so `m_* >= (n+1) η^n`. Lower end: mean value theorem gives
/// `m_* <= (n+1)(t+1)^n`.
pub fn root_bracket(n: usize, m_star: f64) -> (f64, f64) {
    let q = (m_star / (n as f64 + 1.0)).powf(1.0 / n as f64);
    ((q - 1.0).max(0.0), q)
}

/// Unique `t >= 0` with `(t+1)^{n+1} - t^{n+1} = m_star`.
pub fn solve_t(n: usize, m_star: f64) -> Result<f64> {
    if n < 2 {
        return Err(BoundsError::Dimension(n));
    }
    if !m_star.is_finite() {
        return Err(BoundsError::InvalidInput(format!("m_star = {m_star}")));
    }
    if m_star < 1.0 {
        return Err(BoundsError::ScaledMassBelowOne(m_star));
    }
    let p = (n + 1) as f64;
    let f = |t: f64| power_gap(t, p) - m_star;
    let df = |t: f64| p * power_gap(t, p - 1.0);

    let (mut lo, mut hi) = root_bracket(n, m_star);
    if f(lo) >= 0.0 {
        return Ok(lo);
    }
    // Convexity: Newton from the right end stays to the right of the root.
    let mut t = hi;
    for _ in 0..MAX_ITER {
        let ft = f(t);
        if ft == 0.0 {
            return Ok(t);
        }
        if ft < 0.0 {
            lo = t;
        } else {
            hi = t;
        }
        let mut next = t - ft / df(t);
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let step = (next - t).abs();
        t = next;
        if step <= REL_TOL * t.max(f64::MIN_POSITIVE) || hi - lo <= REL_TOL * hi {
            return Ok(t);
        }
    }
    Err(BoundsError::NoConvergence {
        iterations: MAX_ITER,
        last: t,
    })
}

/// `n = 2`: `t = sqrt(m_*/3 - 1/12) - 1/2`.
pub fn root_quadratic(m_star: f64) -> f64 {
    (m_star / 3.0 - 1.0 / 12.0).sqrt() - 0.5
}

/// `n = 3`: Cardano's formula for `4η³ + η = m_*`, `t = η - 1/2`.
///
/// The second cube root `(−m_* + sqrt(m_*² + 1/27))^{1/3}` is evaluated as
/// `(1/3) / (m_* + sqrt(m_*² + 1/27))^{1/3}`.
pub fn root_cardano(m_star: f64) -> f64 {
    let big = m_star + (m_star * m_star + 1.0 / 27.0).sqrt();
    let c = big.cbrt();
    0.5 * c - 0.5 * (1.0 / 3.0) / c - 0.5
}

/// `n = 4`: the equation is biquadratic in `η = t + 1/2`,
/// `5η⁴ + 5η²/2 + 1/16 = m_*`.
pub fn root_biquadratic(m_star: f64) -> f64 {
    ((20.0 * m_star + 5.0).sqrt() / 10.0 - 0.25).sqrt() - 0.5
}

/// Closed-form root where one exists (`n ∈ {2, 3, 4}`).
pub fn closed_form_root(n: usize, m_star: f64) -> Option<f64> {
    match n {
        2 => Some(root_quadratic(m_star)),
        3 => Some(root_cardano(m_star)),
        4 => Some(root_biquadratic(m_star)),
        _ => None,
    }
}
