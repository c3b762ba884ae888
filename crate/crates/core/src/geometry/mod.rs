//! Volume, centroid and minimal second moment of the supported domains.

mod document;

pub use document::ShapeDocument;

use crate::error::{BoundsError, Result};
use crate::minimizer::dimension_constants;
use crate::operator::{inertia_floor, GeometrySummary};
use serde::Serialize;

/// Axis-aligned box `origin + [0, sides]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxisBox {
    pub origin: Vec<f64>,
    pub sides: Vec<f64>,
}

impl AxisBox {
    pub fn new(origin: Vec<f64>, sides: Vec<f64>) -> Self {
        Self { origin, sides }
    }

    /// Box with its lower corner at the origin.
    pub fn at_origin(sides: Vec<f64>) -> Self {
        Self {
            origin: vec![0.0; sides.len()],
            sides,
        }
    }

    fn dim(&self) -> usize {
        self.sides.len()
    }

    fn volume(&self) -> f64 {
        self.sides.iter().product()
    }

    fn centroid(&self) -> Vec<f64> {
        self.origin.iter().zip(&self.sides).map(|(o, s)| o + 0.5 * s).collect()
    }

    /// `Σ s_i² / 12` times the volume.
    fn inertia(&self) -> f64 {
        self.volume() * self.sides.iter().map(|s| s * s).sum::<f64>() / 12.0
    }

    /// `∫ |x - a|²` computed axis by axis.
    fn moment_about(&self, a: &[f64]) -> f64 {
        let vol = self.volume();
        (0..self.dim())
            .map(|i| {
                let lo = self.origin[i] - a[i];
                let hi = lo + self.sides[i];
                (hi.powi(3) - lo.powi(3)) / 3.0 * vol / self.sides[i]
            })
            .sum()
    }

    fn validate(&self) -> Result<()> {
        if self.sides.len() != self.origin.len() {
            return Err(BoundsError::DegenerateShape(format!(
                "box origin has {} coordinates but {} sides",
                self.origin.len(),
                self.sides.len()
            )));
        }
        if self.sides.len() < 2 {
            return Err(BoundsError::Dimension(self.sides.len()));
        }
        if self.sides.iter().any(|s| !(s.is_finite() && *s > 0.0))
            || self.origin.iter().any(|o| !o.is_finite())
        {
            return Err(BoundsError::DegenerateShape(format!("box sides must be positive: {:?}", self.sides)));
        }
        Ok(())
    }

    /// Open interiors intersect. Shared faces do not count.
    fn overlaps(&self, other: &AxisBox) -> bool {
        (0..self.dim()).all(|i| {
            let (a0, a1) = (self.origin[i], self.origin[i] + self.sides[i]);
            let (b0, b1) = (other.origin[i], other.origin[i] + other.sides[i]);
            a0 < b1 && b0 < a1
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum DomainShape {
    Box(AxisBox),
    Ball { center: Vec<f64>, radius: f64 },
    /// Axis-aligned ellipse.
    Ellipse2D { center: [f64; 2], semi_axes: [f64; 2] },
    /// Simple polygon, counterclockwise.
    Polygon2D { vertices: Vec<[f64; 2]> },
    /// Pairwise interior-disjoint boxes.
    BoxUnion { boxes: Vec<AxisBox> },
}

fn shoelace(v: &[[f64; 2]]) -> f64 {
    let n = v.len();
    (0..n)
        .map(|i| {
            let (p, q) = (v[i], v[(i + 1) % n]);
            p[0] * q[1] - q[0] * p[1]
        })
        .sum::<f64>()
        / 2.0
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn on_segment(a: [f64; 2], b: [f64; 2], p: [f64; 2]) -> bool {
    p[0] >= a[0].min(b[0]) && p[0] <= a[0].max(b[0]) && p[1] >= a[1].min(b[1]) && p[1] <= a[1].max(b[1])
}

fn segments_intersect(p1: [f64; 2], p2: [f64; 2], q1: [f64; 2], q2: [f64; 2]) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    (d1 == 0.0 && on_segment(q1, q2, p1))
        || (d2 == 0.0 && on_segment(q1, q2, p2))
        || (d3 == 0.0 && on_segment(p1, p2, q1))
        || (d4 == 0.0 && on_segment(p1, p2, q2))
}

/// Area, first moments and second moment `∫(x²+y²)` of a polygon, by the
/// per-edge Green's theorem formulas, about the point `a`.
fn polygon_moments(v: &[[f64; 2]], a: [f64; 2]) -> (f64, [f64; 2], f64) {
    let n = v.len();
    let (mut area2, mut sx, mut sy, mut ixx, mut iyy) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for i in 0..n {
        let (x0, y0) = (v[i][0] - a[0], v[i][1] - a[1]);
        let (x1, y1) = (v[(i + 1) % n][0] - a[0], v[(i + 1) % n][1] - a[1]);
        let cross = x0 * y1 - x1 * y0;
        area2 += cross;
        sx += (x0 + x1) * cross;
        sy += (y0 + y1) * cross;
        ixx += (y0 * y0 + y0 * y1 + y1 * y1) * cross;
        iyy += (x0 * x0 + x0 * x1 + x1 * x1) * cross;
    }
    let area = area2 / 2.0;
    (area, [sx / 6.0, sy / 6.0], (ixx + iyy) / 12.0)
}

fn vertex_mean(v: &[[f64; 2]]) -> [f64; 2] {
    let k = v.len() as f64;
    let (x, y) = v.iter().fold((0.0, 0.0), |(x, y), p| (x + p[0], y + p[1]));
    [x / k, y / k]
}

impl DomainShape {
    pub fn unit_box(n: usize) -> Self {
        DomainShape::Box(AxisBox::at_origin(vec![1.0; n]))
    }

    pub fn dim(&self) -> usize {
        match self {
            DomainShape::Box(b) => b.dim(),
            DomainShape::Ball { center, .. } => center.len(),
            DomainShape::Ellipse2D { .. } | DomainShape::Polygon2D { .. } => 2,
            DomainShape::BoxUnion { boxes } => boxes.first().map_or(0, AxisBox::dim),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            DomainShape::Box(b) => b.validate(),
            DomainShape::Ball { center, radius } => {
                if center.len() < 2 {
                    return Err(BoundsError::Dimension(center.len()));
                }
                if !(radius.is_finite() && *radius > 0.0) || center.iter().any(|c| !c.is_finite()) {
                    return Err(BoundsError::DegenerateShape(format!("ball radius must be positive, got {radius}")));
                }
                Ok(())
            }
            DomainShape::Ellipse2D { center, semi_axes } => {
                if semi_axes.iter().any(|a| !(a.is_finite() && *a > 0.0)) || center.iter().any(|c| !c.is_finite()) {
                    return Err(BoundsError::DegenerateShape(format!("ellipse axes must be positive: {semi_axes:?}")));
                }
                Ok(())
            }
            DomainShape::Polygon2D { vertices } => validate_polygon(vertices),
            DomainShape::BoxUnion { boxes } => {
                let first = boxes
                    .first()
                    .ok_or_else(|| BoundsError::DegenerateShape("box union is empty".into()))?;
                for b in boxes {
                    b.validate()?;
                    if b.dim() != first.dim() {
                        return Err(BoundsError::DegenerateShape("boxes in a union must share a dimension".into()));
                    }
                }
                for (i, a) in boxes.iter().enumerate() {
                    for (j, b) in boxes.iter().enumerate().skip(i + 1) {
                        if a.overlaps(b) {
                            return Err(BoundsError::DegenerateShape(format!("boxes {i} and {j} overlap")));
                        }
                    }
                }
                Ok(())
            }
        }
    }

    /// Lebesgue measure.
    pub fn volume(&self) -> Result<f64> {
        self.validate()?;
        Ok(match self {
            DomainShape::Box(b) => b.volume(),
            DomainShape::Ball { center, radius } => {
                dimension_constants(center.len())?.omega * radius.powi(center.len() as i32)
            }
            DomainShape::Ellipse2D { semi_axes, .. } => std::f64::consts::PI * semi_axes[0] * semi_axes[1],
            DomainShape::Polygon2D { vertices } => shoelace(vertices),
            DomainShape::BoxUnion { boxes } => boxes.iter().map(AxisBox::volume).sum(),
        })
    }

    /// Centroid; the point minimising `a ↦ ∫|x - a|²`.
    pub fn centroid(&self) -> Result<Vec<f64>> {
        self.validate()?;
        Ok(match self {
            DomainShape::Box(b) => b.centroid(),
            DomainShape::Ball { center, .. } => center.clone(),
            DomainShape::Ellipse2D { center, .. } => center.to_vec(),
            DomainShape::Polygon2D { vertices } => {
                let r = vertex_mean(vertices);
                let (area, s, _) = polygon_moments(vertices, r);
                vec![r[0] + s[0] / area, r[1] + s[1] / area]
            }
            DomainShape::BoxUnion { boxes } => {
                let total: f64 = boxes.iter().map(AxisBox::volume).sum();
                let mut c = vec![0.0; self.dim()];
                for b in boxes {
                    let w = b.volume() / total;
                    for (ci, bi) in c.iter_mut().zip(b.centroid()) {
                        *ci += w * bi;
                    }
                }
                c
            }
        })
    }

    /// `I = ∫_Ω |x - centroid|² dx`.
    pub fn inertia_min(&self) -> Result<f64> {
        self.validate()?;
        Ok(match self {
            DomainShape::Box(b) => b.inertia(),
            DomainShape::Ball { center, radius } => {
                let n = center.len();
                let dc = dimension_constants(n)?;
                dc.sigma * radius.powi(n as i32 + 2) / (n as f64 + 2.0)
            }
            DomainShape::Ellipse2D { semi_axes: [a, b], .. } => {
                std::f64::consts::PI * a * b * (a * a + b * b) / 4.0
            }
            DomainShape::Polygon2D { vertices } => {
                let r = vertex_mean(vertices);
                let (area, s, i) = polygon_moments(vertices, r);
                i - (s[0] * s[0] + s[1] * s[1]) / area
            }
            DomainShape::BoxUnion { boxes } => {
                let c = self.centroid()?;
                boxes
                    .iter()
                    .map(|b| {
                        let d2: f64 = b.centroid().iter().zip(&c).map(|(x, y)| (x - y).powi(2)).sum();
                        b.inertia() + b.volume() * d2
                    })
                    .sum()
            }
        })
    }

    /// `∫_Ω |x - a|² dx` for an arbitrary point `a`. Boxes and polygons are
    /// integrated directly; balls and ellipses use the parallel-axis rule.
    pub fn moment_about(&self, a: &[f64]) -> Result<f64> {
        self.validate()?;
        if a.len() != self.dim() {
            return Err(BoundsError::InvalidInput(format!(
                "probe point has {} coordinates, shape has dimension {}",
                a.len(),
                self.dim()
            )));
        }
        Ok(match self {
            DomainShape::Box(b) => b.moment_about(a),
            DomainShape::BoxUnion { boxes } => boxes.iter().map(|b| b.moment_about(a)).sum(),
            DomainShape::Polygon2D { vertices } => polygon_moments(vertices, [a[0], a[1]]).2,
            _ => {
                let c = self.centroid()?;
                let d2: f64 = c.iter().zip(a).map(|(x, y)| (x - y).powi(2)).sum();
                self.inertia_min()? + self.volume()? * d2
            }
        })
    }

    pub fn summary(&self) -> Result<GeometrySummary> {
        GeometrySummary::new(self.dim(), self.volume()?, self.inertia_min()?)
    }

    pub fn translated(&self, v: &[f64]) -> Self {
        let shift = |p: &[f64]| -> Vec<f64> { p.iter().zip(v).map(|(x, d)| x + d).collect() };
        match self {
            DomainShape::Box(b) => DomainShape::Box(AxisBox::new(shift(&b.origin), b.sides.clone())),
            DomainShape::Ball { center, radius } => DomainShape::Ball {
                center: shift(center),
                radius: *radius,
            },
            DomainShape::Ellipse2D { center, semi_axes } => DomainShape::Ellipse2D {
                center: [center[0] + v[0], center[1] + v[1]],
                semi_axes: *semi_axes,
            },
            DomainShape::Polygon2D { vertices } => DomainShape::Polygon2D {
                vertices: vertices.iter().map(|p| [p[0] + v[0], p[1] + v[1]]).collect(),
            },
            DomainShape::BoxUnion { boxes } => DomainShape::BoxUnion {
                boxes: boxes.iter().map(|b| AxisBox::new(shift(&b.origin), b.sides.clone())).collect(),
            },
        }
    }

    /// Dilation `x ↦ a x` about the coordinate origin.
    pub fn scaled(&self, a: f64) -> Self {
        let sc = |p: &[f64]| -> Vec<f64> { p.iter().map(|x| a * x).collect() };
        match self {
            DomainShape::Box(b) => DomainShape::Box(AxisBox::new(sc(&b.origin), sc(&b.sides))),
            DomainShape::Ball { center, radius } => DomainShape::Ball {
                center: sc(center),
                radius: a * radius,
            },
            DomainShape::Ellipse2D { center, semi_axes } => DomainShape::Ellipse2D {
                center: [a * center[0], a * center[1]],
                semi_axes: [a * semi_axes[0], a * semi_axes[1]],
            },
            DomainShape::Polygon2D { vertices } => DomainShape::Polygon2D {
                vertices: vertices.iter().map(|p| [a * p[0], a * p[1]]).collect(),
            },
            DomainShape::BoxUnion { boxes } => DomainShape::BoxUnion {
                boxes: boxes.iter().map(|b| AxisBox::new(sc(&b.origin), sc(&b.sides))).collect(),
            },
        }
    }
}

fn validate_polygon(v: &[[f64; 2]]) -> Result<()> {
    let n = v.len();
    if n < 3 {
        return Err(BoundsError::DegenerateShape(format!("polygon needs at least 3 vertices, got {n}")));
    }
    if v.iter().flatten().any(|c| !c.is_finite()) {
        return Err(BoundsError::DegenerateShape("polygon has non-finite coordinates".into()));
    }
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                continue;
            }
            if segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]) {
                return Err(BoundsError::DegenerateShape(format!("polygon edges {i} and {j} intersect")));
            }
        }
    }
    let area = shoelace(v);
    if area == 0.0 {
        return Err(BoundsError::DegenerateShape("polygon has zero area".into()));
    }
    if area < 0.0 {
        return Err(BoundsError::DegenerateShape("polygon vertices must be counterclockwise".into()));
    }
    Ok(())
}

/// Ball inequality `I ≥ n |Ω|^{1+2/n} / ((n+2) ω_n^{2/n})`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub ok: bool,
}

pub fn check_isoperimetric_moment(shape: &DomainShape) -> Result<MomentCheck> {
    let lhs = shape.inertia_min()?;
    let rhs = inertia_floor(shape.dim(), shape.volume()?)?;
    Ok(MomentCheck {
        lhs,
        rhs,
        ok: lhs >= rhs - 1e-12,
    })
}
