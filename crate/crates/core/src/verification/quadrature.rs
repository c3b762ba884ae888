use crate::minimizer::MinimizerProfile;

const MAX_DEPTH: u32 = 48;

/// Adaptive Simpson quadrature with Richardson correction.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(&f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// `∫₀^∞ r^γ F(r) dr` by quadrature over the smooth pieces of the profile.
pub fn quadrature_moment(profile: &MinimizerProfile, gamma: f64) -> f64 {
    let f = |r: f64| if r == 0.0 { 0.0 } else { r.powf(gamma) * profile.value(r) };
    let breaks = [0.0, profile.kink(), profile.support_end()];
    // scale for the tolerance: the integrand is bounded by end^γ·max(F)
    let end = profile.support_end();
    let scale = end.powf(gamma + 1.0) * profile.value(0.0);
    breaks
        .windows(2)
        .map(|w| adaptive_simpson(f, w[0], w[1], 1e-14 * scale))
        .sum()
}
