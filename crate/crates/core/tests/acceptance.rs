//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Tolerances are fixed here and never adjusted to make a check pass.

mod common;

use common::{catalog, exact_minus_expansion_scaled, rel};
use rand::{Rng, SeedableRng};
use spectral_bounds::geometry::{AxisBox, DomainShape};
use spectral_bounds::minimizer::*;
use spectral_bounds::operator::*;
use spectral_bounds::verification::*;
use std::f64::consts::PI;
use OperatorKind::{DirichletBilaplacian, DirichletLaplacian, Stokes};

const CLOSED_FORM_TOL: f64 = 1e-12;
const ROOT_RESIDUAL_TOL: f64 = 1e-10;
const ROOT_AGREEMENT_TOL: f64 = 1e-10;
const EXPANSION_TOL: f64 = 1e-12;
const LP_GAP_TOL: f64 = 0.01;
const BALL_EQUALITY_TOL: f64 = 1e-12;
const SQUARE_INERTIA_TOL: f64 = 1e-12;
const WEYL_TOL: f64 = 0.05;
const SAMPLES: usize = 1000;

/// Outcome of one criterion: a list of named sub-checks.
#[derive(Default)]
struct Outcome {
    checks: Vec<(String, bool)>,
    notes: Vec<String>,
}

impl Outcome {
    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }
}

fn input(n: usize, cap: f64, slope: f64, mass: f64) -> MinimizationInput {
    MinimizationInput::new(n, cap, slope, mass).unwrap()
}

/// Random `(n, M, L, m)` with `m_* ≥ 1`.
fn random_admissible(rng: &mut impl Rng, n: usize) -> MinimizationInput {
    let cap = 10f64.powf(rng.gen_range(-2.0..2.0));
    let slope = 10f64.powf(rng.gen_range(-2.0..2.0));
    let ms = 10f64.powf(rng.gen_range(0.0..9.0));
    let omega = dimension_constants(n).unwrap().omega;
    input(n, cap, slope, ms * omega * cap.powi(n as i32 + 1) / ((n as f64 + 1.0) * slope.powi(n as i32)))
}

fn closed_form_equivalence() -> Outcome {
    let mut out = Outcome::default();
    let mut rng = rand::rngs::StdRng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for _ in 0..SAMPLES {
        let i = random_admissible(&mut rng, 2);
        let (cap, slope, m) = (i.cap, i.slope, i.mass);
        let lemma = m * m / (2.0 * PI * cap) + cap * cap * m / (6.0 * slope * slope)
            - PI * cap.powi(5) / (90.0 * slope.powi(4));
        worst = worst.max(rel(sigma_exact(&i).unwrap(), lemma));
    }
    out.check(format!("max relative error {worst:.2e} <= {CLOSED_FORM_TOL:e} over {SAMPLES} draws"), worst <= CLOSED_FORM_TOL);
    let w = sigma_exact(&input(2, 1.0, 1.0, 7.0 * PI / 3.0)).unwrap();
    out.check(format!("witness M=L=1, m=7pi/3 gives {w:.15} = 31pi/10"), rel(w, 3.1 * PI) <= CLOSED_FORM_TOL);
    out
}

fn root_solver() -> Outcome {
    let mut out = Outcome::default();
    let grid = [1.0, 7.0, 15.0, 31.0, 1e3, 1e6, 1e12];
    let mut worst_residual: f64 = 0.0;
    for n in 2..=8usize {
        for ms in grid {
            let t = solve_t(n, ms).unwrap();
            let lhs: f64 = (0..=n).map(|k| (t + 1.0).powi(k as i32) * t.powi((n - k) as i32)).sum();
            worst_residual = worst_residual.max(rel(lhs, ms));
        }
    }
    out.check(format!("worst residual {worst_residual:.2e} <= {ROOT_RESIDUAL_TOL:e}"), worst_residual <= ROOT_RESIDUAL_TOL);
    let mut worst_agreement: f64 = 0.0;
    for n in 2..=4usize {
        for ms in grid {
            let t = solve_t(n, ms).unwrap();
            let c = closed_form_root(n, ms).unwrap();
            worst_agreement = worst_agreement.max((t - c).abs() / t.max(1.0));
        }
    }
    out.check(
        format!("quadratic/Cardano/biquadratic agreement {worst_agreement:.2e} <= {ROOT_AGREEMENT_TOL:e}"),
        worst_agreement <= ROOT_AGREEMENT_TOL,
    );
    out
}

/// Value truncated to one decimal, as the constants are printed ("210.2...").
fn printed(v: f64) -> f64 {
    (v * 10.0).floor() / 10.0
}

fn published_constants() -> Outcome {
    let mut out = Outcome::default();
    let floors = [
        ("Laplace n=3", DirichletLaplacian, 3, 210.2, 16.0 * 27.0 * PI / 5.0 * 0.6f64.sqrt()),
        ("Stokes n=3", Stokes, 3, 193.1, 72.0 * PI * 0.9f64.powf(1.5)),
        ("Laplace n=4", DirichletLaplacian, 4, 2275.5, 5.0 / 9.0 * 4096.0),
        ("Stokes n=4", Stokes, 4, 1348.7, 5.0 * 65536.0 / 243.0),
    ];
    for (name, kind, n, shown, closed) in floors {
        let v = m_star_floor(kind, n).unwrap();
        out.check(format!("{name} floor {v:.4} matches its closed form"), rel(v, closed) <= 1e-12);
        out.check(format!("{name} floor {v:.4} reads {shown} to printed precision"), printed(v) == shown);
    }
    let betas = [
        (DirichletLaplacian, 2, 119.0 / 120.0),
        (DirichletLaplacian, 3, 0.986),
        (DirichletLaplacian, 4, 0.983),
        (Stokes, 2, 239.0 / 240.0),
        (Stokes, 3, 0.986),
        (Stokes, 4, 0.978),
        (DirichletBilaplacian, 2, 12095.0 / 12096.0),
    ];
    for (kind, n, b) in betas {
        out.check(format!("{kind} n={n} beta = {b}"), theorem_beta(kind, n).unwrap() == b);
    }
    // lemma-level constants sit above the published ones
    for (kind, n) in [(DirichletLaplacian, 3), (DirichletLaplacian, 4), (Stokes, 3), (Stokes, 4)] {
        let (l, t) = (lemma_beta(kind, n).unwrap(), theorem_beta(kind, n).unwrap());
        out.check(format!("{kind} n={n} lemma beta {l:.6} >= {t}"), l >= t);
    }
    out
}

fn ordering_and_sharpness() -> Outcome {
    let mut out = Outcome::default();
    let mut rng = rand::rngs::StdRng::seed_from_u64(4);
    let mut bad = 0;
    for _ in 0..SAMPLES {
        let n = rng.gen_range(2..=8);
        let i = random_admissible(&mut rng, n);
        let (ly, me, ex) = (sigma_liyau(&i).unwrap(), sigma_melas_lb(&i).unwrap(), sigma_exact(&i).unwrap());
        if !(ly <= me && me <= ex) {
            bad += 1;
        }
    }
    out.check(format!("liyau <= melas <= exact on {SAMPLES} random inputs ({bad} failures)"), bad == 0);

    let mut worst: f64 = 0.0;
    for _ in 0..SAMPLES {
        let i = random_admissible(&mut rng, 2);
        worst = worst.max(rel(sigma_exact(&i).unwrap(), sigma_asymptotic(&i).unwrap()));
    }
    out.check(format!("n=2 exact = expansion, worst {worst:.2e} <= {EXPANSION_TOL:e}"), worst <= EXPANSION_TOL);

    // strict inequality: compared directly where the gap exceeds double
    // rounding, and through the cancellation-free difference everywhere
    let (mut direct, mut series, mut failures) = (0, 0, 0);
    for (kind, n) in [(DirichletLaplacian, 3), (Stokes, 3), (DirichletLaplacian, 4), (Stokes, 4)] {
        let m0 = m_star_floor(kind, n).unwrap();
        let omega = dimension_constants(n).unwrap().omega;
        for k in 0..=400 {
            let ms = m0 * (1e8 / m0).powf(k as f64 / 400.0);
            let i = input(n, 1.0, 1.0, ms * omega / (n as f64 + 1.0));
            let (ex, s0) = (sigma_exact(&i).unwrap(), sigma_asymptotic(&i).unwrap());
            let gap = exact_minus_expansion_scaled(n, solve_t(n, ms).unwrap() + 0.5);
            series += 1;
            if gap <= 0.0 {
                failures += 1;
            }
            if gap > 1e-13 {
                direct += 1;
                if ex <= s0 {
                    failures += 1;
                }
            }
        }
    }
    out.check(
        format!("n=3,4 exact > expansion on m* in [m0, 1e8]: {series} series points, {direct} direct comparisons, {failures} failures"),
        failures == 0,
    );
    out
}

fn spectral_dominance() -> Outcome {
    let mut out = Outcome::default();
    for sides in [vec![1.0, 1.0], vec![1.0, 1.0, 1.0]] {
        let shape = DomainShape::Box(AxisBox::at_origin(sides.clone()));
        let geom = shape.summary().unwrap();
        let sums = box_spectrum(&sides, 200).unwrap().partial_sums();
        let (mut chain_exact, mut chain_theorem, mut theorem_below_exact) = (0, 0, 0);
        for m in 1..=200usize {
            let r = bound_exact(DirichletLaplacian, &geom, m as f64).unwrap();
            let (s, ly, th) = (sums[m - 1], r.liyau.unwrap(), r.theorem_form.unwrap());
            chain_exact += (ly <= r.exact && r.exact <= s) as usize;
            chain_theorem += (ly <= th && th <= s) as usize;
            theorem_below_exact += (th <= r.exact) as usize;
        }
        let label = format!("box {sides:?}");
        out.check(format!("{label}: liyau <= exact <= spectrum for {chain_exact}/200"), chain_exact == 200);
        out.check(format!("{label}: liyau <= theorem <= spectrum for {chain_theorem}/200"), chain_theorem == 200);
        out.note(format!("{label}: theorem <= exact at {theorem_below_exact}/200 values of m"));
    }
    let geom = DomainShape::unit_box(2).summary().unwrap();
    let r = bound_exact(DirichletLaplacian, &geom, 10.0).unwrap();
    let s10 = box_spectrum(&[1.0, 1.0], 10).unwrap().partial_sums()[9];
    out.check(format!("witness m=10: spectrum {s10:.3} = 100pi^2"), rel(s10, 100.0 * PI * PI) <= 1e-12);
    out.note(format!(
        "m=10 unit square: exact {:.6}, theorem {:.6}, liyau {:.6}",
        r.exact,
        r.theorem_form.unwrap(),
        r.liyau.unwrap()
    ));
    out
}

fn epsilon_bounds() -> Outcome {
    let mut out = Outcome::default();
    let mut worst = [0.0f64; 2];
    for (_, shape) in catalog().into_iter().filter(|(_, s)| s.dim() == 2) {
        let geom = shape.summary().unwrap();
        for (j, (kind, c)) in [(DirichletLaplacian, 120.0), (Stokes, 240.0)].into_iter().enumerate() {
            for m in 1..=200usize {
                let m = m as f64;
                let eps = bound_exact(kind, &geom, m).unwrap().epsilon.unwrap();
                // excess over the bound; 1e-11 absolute covers rounding in eps
                worst[j] = worst[j].max(eps - 1.0 / (c * m));
            }
        }
    }
    out.check(format!("Laplace eps <= 1/(120m), max excess {:.2e}", worst[0]), worst[0] <= 1e-11);
    out.check(format!("Stokes eps <= 1/(240m), max excess {:.2e}", worst[1]), worst[1] <= 1e-11);
    for (n, sides) in [(3, vec![1.0, 1.0, 1.0]), (3, vec![1.0, 2.0, 3.0]), (4, vec![1.0; 4]), (4, vec![1.0, 0.5, 2.0, 1.5])] {
        let geom = DomainShape::Box(AxisBox::at_origin(sides.clone())).summary().unwrap();
        for kind in [DirichletLaplacian, Stokes] {
            let ms: Vec<f64> = (1..=200).map(|m| m as f64).chain([1e3, 1e4, 1e5, 1e6]).collect();
            let scaled: Vec<f64> = ms
                .iter()
                .map(|m| m.powf(2.0 / n as f64) * bound_exact(kind, &geom, *m).unwrap().epsilon.unwrap())
                .collect();
            let max = scaled.iter().cloned().fold(f64::MIN, f64::max);
            let min = scaled.iter().cloned().fold(f64::MAX, f64::min);
            out.check(format!("{kind} box {sides:?}: m^(2/n) eps in [{min:.4}, {max:.4}]"), min >= 0.0 && max < 1.0);
        }
    }
    out
}

fn variational_oracle() -> Outcome {
    let mut out = Outcome::default();
    let m = 7.0 * PI / 3.0;
    let closed = sigma_exact(&input(2, 1.0, 1.0, m)).unwrap();
    let r_max = 1.25 * MinimizerProfile::for_input(&input(2, 1.0, 1.0, m)).unwrap().support_end();
    let gaps: Vec<(usize, f64)> = [100, 200, 400, 800]
        .into_iter()
        .map(|g| (g, (lp_minimize(2, 1.0, 1.0, m, g, r_max).unwrap().value - closed).abs() / closed))
        .collect();
    let g400 = gaps[2].1;
    out.check(format!("grid 400 gap {g400:.2e} <= {LP_GAP_TOL}"), g400 <= LP_GAP_TOL);
    let decreasing = gaps.windows(2).all(|w| w[1].1 < w[0].1);
    let text: Vec<String> = gaps.iter().map(|(g, e)| format!("{g}:{e:.2e}")).collect();
    out.check(format!("gap decays under refinement ({})", text.join(" ")), decreasing);
    out
}

fn geometry() -> Outcome {
    let mut out = Outcome::default();
    let mut failures = Vec::new();
    for (name, shape) in catalog() {
        let c = spectral_bounds::geometry::check_isoperimetric_moment(&shape).unwrap();
        if !c.ok {
            failures.push(name);
        }
        if matches!(shape, DomainShape::Ball { .. }) {
            out.check(format!("{name}: I = ball value, rel {:.1e}", rel(c.lhs, c.rhs)), rel(c.lhs, c.rhs) <= BALL_EQUALITY_TOL);
        }
    }
    out.check(format!("ball inequality on {} catalog shapes, failures {failures:?}", catalog().len()), failures.is_empty());
    let boxed = DomainShape::unit_box(2).inertia_min().unwrap();
    let poly = DomainShape::Polygon2D { vertices: vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]] }
        .inertia_min()
        .unwrap();
    out.check(
        format!("unit square I: box {boxed:.15}, polygon {poly:.15}"),
        rel(boxed, 1.0 / 6.0) <= SQUARE_INERTIA_TOL && rel(poly, 1.0 / 6.0) <= SQUARE_INERTIA_TOL,
    );
    out
}

fn rearrangement() -> Outcome {
    let mut out = Outcome::default();
    let n = 96;
    let h = 1.0 / n as f64;
    let grid = |f: &dyn Fn(f64, f64) -> f64| -> Vec<Vec<f64>> {
        (0..n)
            .map(|i| (0..n).map(|j| f((i as f64 + 0.5) * h - 0.5, (j as f64 + 0.5) * h - 0.5)).collect())
            .collect()
    };
    let centred = grid(&|x, y| if x * x + y * y <= 0.09 { 1.0 } else { 0.0 });
    let c = rearrangement_moment_check(&centred, h).unwrap();
    out.check(format!("centred disk: raw {:.10} = rearranged {:.10}", c.raw, c.rearranged), c.ok && c.raw == c.rearranged);

    let shifted = grid(&|x, y| if (x - 0.2).powi(2) + (y + 0.1).powi(2) <= 0.04 { 1.0 } else { 0.0 });
    let c = rearrangement_moment_check(&shifted, h).unwrap();
    out.check(format!("off-centre disk: raw {:.6} > rearranged {:.6}", c.raw, c.rearranged), c.ok && c.raw > c.rearranged);

    let step = grid(&|x, y| {
        if x.abs() < 0.1 && (y - 0.25).abs() < 0.1 {
            2.0
        } else if x.abs() < 0.35 && y.abs() < 0.35 {
            1.0
        } else {
            0.0
        }
    });
    let c = rearrangement_moment_check(&step, h).unwrap();
    out.check(format!("two-level step: raw {:.6} > rearranged {:.6}", c.raw, c.rearranged), c.ok && c.raw > c.rearranged);
    out
}

fn weyl_note() -> Outcome {
    let mut out = Outcome::default();
    let geom = DomainShape::unit_box(2).summary().unwrap();
    let m = 10_000usize;
    let integrated: f64 = (1..=m).map(|k| weyl_asymptote(DirichletLaplacian, &geom, k as f64).unwrap()).sum();
    let ratio = bound_liyau(DirichletLaplacian, &geom, m as f64).unwrap() / integrated;
    out.check(format!("unit square m=1e4: liyau / Weyl sum = {ratio:.6}, within {WEYL_TOL}"), (ratio - 1.0).abs() <= WEYL_TOL);
    let exact_sum = box_spectrum(&[1.0, 1.0], m).unwrap().partial_sums()[m - 1];
    out.note(format!("spectrum sum / Weyl sum = {:.6}", exact_sum / integrated));
    out
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("1 closed-form equivalence (n=2)", closed_form_equivalence),
        ("2 root solver", root_solver),
        ("3 published constants", published_constants),
        ("4 ordering and sharpness", ordering_and_sharpness),
        ("5 spectral dominance", spectral_dominance),
        ("6 epsilon bounds", epsilon_bounds),
        ("7 variational oracle", variational_oracle),
        ("8 geometry", geometry),
        ("9 rearrangement", rearrangement),
        ("W Weyl-order sharpness", weyl_note),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = run();
        let status = if outcome.passed() { "PASS" } else { "FAIL" };
        let failing: Vec<&str> = outcome.checks.iter().filter(|c| !c.1).map(|c| c.0.as_str()).collect();
        if failing.is_empty() {
            println!("criterion {name}: {status} ({} checks)", outcome.checks.len());
        } else {
            failed += 1;
            println!("criterion {name}: {status} ({} of {} checks failed: {})", failing.len(), outcome.checks.len(), failing.join("; "));
        }
        for (check, ok) in &outcome.checks {
            println!("    [{}] {check}", if *ok { "ok" } else { "FAILED" });
        }
        for note in &outcome.notes {
            println!("    note: {note}");
        }
    }
    println!("acceptance: {failed} criteria failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
