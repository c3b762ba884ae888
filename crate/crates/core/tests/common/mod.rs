#![allow(dead_code)]

use spectral_bounds::geometry::{AxisBox, DomainShape};

/// Shapes used across the integration tests.
pub fn catalog() -> Vec<(&'static str, DomainShape)> {
    let b = |sides: &[f64]| DomainShape::Box(AxisBox::at_origin(sides.to_vec()));
    let hexagon: Vec<[f64; 2]> = (0..6)
        .map(|k| {
            let a = std::f64::consts::PI / 3.0 * k as f64;
            [a.cos(), a.sin()]
        })
        .collect();
    vec![
        ("unit square", b(&[1.0, 1.0])),
        ("rectangle 1x2", b(&[1.0, 2.0])),
        ("thin rectangle", b(&[0.1, 3.0])),
        ("unit cube", b(&[1.0, 1.0, 1.0])),
        ("box 1x2x3", b(&[1.0, 2.0, 3.0])),
        ("unit tesseract", b(&[1.0; 4])),
        ("unit disk", DomainShape::Ball { center: vec![0.0, 0.0], radius: 1.0 }),
        ("ball r=2", DomainShape::Ball { center: vec![1.0, -1.0, 0.5], radius: 2.0 }),
        ("4-ball", DomainShape::Ball { center: vec![0.0; 4], radius: 1.0 }),
        ("ellipse 2x1", DomainShape::Ellipse2D { center: [0.5, 0.0], semi_axes: [2.0, 1.0] }),
        ("triangle", DomainShape::Polygon2D { vertices: vec![[0.0, 0.0], [3.0, 0.0], [1.0, 2.0]] }),
        ("hexagon", DomainShape::Polygon2D { vertices: hexagon }),
        (
            "L polygon",
            DomainShape::Polygon2D {
                vertices: vec![[0.0, 0.0], [2.0, 0.0], [2.0, 1.0], [1.0, 1.0], [1.0, 2.0], [0.0, 2.0]],
            },
        ),
        (
            "L box union",
            DomainShape::BoxUnion {
                boxes: vec![
                    AxisBox::new(vec![0.0, 0.0], vec![2.0, 1.0]),
                    AxisBox::new(vec![0.0, 1.0], vec![1.0, 1.0]),
                ],
            },
        ),
        (
            "stacked boxes",
            DomainShape::BoxUnion {
                boxes: vec![
                    AxisBox::new(vec![0.0, 0.0, 0.0], vec![2.0, 2.0, 1.0]),
                    AxisBox::new(vec![0.5, 0.5, 1.0], vec![1.0, 1.0, 1.0]),
                ],
            },
        ),
    ]
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn binom(p: usize, j: usize) -> f64 {
    (0..j).fold(1.0, |acc, i| acc * (p - i) as f64 / (i + 1) as f64)
}

/// `((η+½)^p - (η-½)^p) / (p η^{p-1}) - 1`, summed term by term.
fn gap_tail(p: usize, eta: f64) -> f64 {
    (3..=p)
        .step_by(2)
        .map(|j| 2.0 / p as f64 * binom(p, j) * 0.5f64.powi(j as i32) * eta.powi(1 - j as i32))
        .sum()
}

/// `(Σ - Σ₀) / (C η^{n+2})` with `C` the common prefactor, evaluated as a
/// function of `η = t + ½` without forming the two large terms.
pub fn exact_minus_expansion_scaled(n: usize, eta: f64) -> f64 {
    let nf = n as f64;
    let w = gap_tail(n + 1, eta);
    let b = gap_tail(n + 3, eta);
    let e1 = ((1.0 + 2.0 / nf) * w.ln_1p()).exp_m1();
    let c = (nf - 1.0) * (nf + 2.0) * (3.0 * nf + 2.0) / 1440.0;
    let e2 = (1.0 + w).powf(1.0 - 2.0 / nf);
    b - e1 - (nf + 2.0) / 12.0 * eta.powi(-2) * (1.0 + w) + c * eta.powi(-4) * e2
}
