//! Discretised radial minimisation solved as a linear program.
//!
//! Unknowns are cell values `F_i` on the midpoint grid `r_i = (i + 1/2)Δ`,
//! `i < N`, with `F_N = 0` past the grid. Constraints: `0 ≤ F_i ≤ M`,
//! `0 ≤ F_i - F_{i+1} ≤ LΔ`, and `σ_n Σ r_i^{n-1} F_i Δ = m`. The objective is
//! `σ_n Σ r_i^{n+1} F_i Δ`.
//!
//! The default formulation works with the decrements `d_i = F_i - F_{i+1}`,
//! which turns monotonicity and the slope bound into simple variable bounds
//! and leaves two rows. The direct formulation in `F_i` is kept for
//! cross-checking on small grids.

use super::simplex::{LinearProgram, Relation};
use crate::error::{BoundsError, Result};
use crate::minimizer::dimension_constants;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpFormulation {
    Differences,
    Direct,
}

/// Sampled nonincreasing radial profile.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadialProfileGrid {
    pub step: f64,
    pub values: Vec<f64>,
}

impl RadialProfileGrid {
    /// Checks `0 ≤ F_i ≤ M` and `0 ≤ F_i - F_{i+1} ≤ LΔ` up to `tol`.
    pub fn is_admissible(&self, cap: f64, slope: f64, tol: f64) -> bool {
        let bounded = self.values.iter().all(|v| *v >= -tol && *v <= cap + tol);
        let mut next = self.values.iter().skip(1).copied().chain(std::iter::once(0.0));
        let steps = self.values.iter().all(|v| {
            let drop = v - next.next().unwrap_or(0.0);
            drop >= -tol && drop <= slope * self.step + tol
        });
        bounded && steps
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LpOutcome {
    pub value: f64,
    pub profile: RadialProfileGrid,
    pub iterations: usize,
}

pub fn lp_minimize(n: usize, cap: f64, slope: f64, mass: f64, grid_points: usize, r_max: f64) -> Result<LpOutcome> {
    lp_minimize_with(n, cap, slope, mass, grid_points, r_max, LpFormulation::Differences)
}

pub fn lp_minimize_with(
    n: usize,
    cap: f64,
    slope: f64,
    mass: f64,
    grid_points: usize,
    r_max: f64,
    formulation: LpFormulation,
) -> Result<LpOutcome> {
    let sigma = dimension_constants(n)?.sigma;
    for (name, v) in [("M", cap), ("L", slope), ("m", mass), ("r_max", r_max)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(BoundsError::InvalidInput(format!("{name} must be positive, got {v}")));
        }
    }
    if grid_points < 2 {
        return Err(BoundsError::InvalidInput("grid needs at least two points".into()));
    }
    let np = grid_points;
    let step = r_max / np as f64;
    let radius = |i: usize| (i as f64 + 0.5) * step;
    let mass_w: Vec<f64> = (0..np).map(|i| sigma * radius(i).powi(n as i32 - 1) * step).collect();
    let cost_w: Vec<f64> = (0..np).map(|i| sigma * radius(i).powi(n as i32 + 1) * step).collect();
    let drop_max = slope * step;

    let (solution, values) = match formulation {
        LpFormulation::Differences => {
            // F_i = Σ_{j≥i} d_j, so Σ_i w_i F_i = Σ_j d_j W_j with W_j = Σ_{i≤j} w_i
            let cum = |w: &[f64]| -> Vec<f64> {
                w.iter()
                    .scan(0.0, |acc, v| {
                        *acc += v;
                        Some(*acc)
                    })
                    .collect()
            };
            let mut lp = LinearProgram::new(np);
            lp.objective = cum(&cost_w);
            lp.upper = vec![drop_max; np];
            lp.add(cum(&mass_w), Relation::Eq, mass);
            lp.add(vec![1.0; np], Relation::Le, cap);
            let sol = lp.solve().map_err(infeasible)?;
            let mut values = vec![0.0; np];
            let mut acc = 0.0;
            for i in (0..np).rev() {
                acc += sol.x[i];
                values[i] = acc;
            }
            (sol, values)
        }
        LpFormulation::Direct => {
            let mut lp = LinearProgram::new(np);
            lp.objective = cost_w;
            lp.upper = vec![cap; np];
            lp.add(mass_w, Relation::Eq, mass);
            for i in 0..np {
                let mut row = vec![0.0; np];
                row[i] = 1.0;
                if i + 1 < np {
                    row[i + 1] = -1.0;
                    lp.add(row.clone(), Relation::Ge, 0.0);
                }
                lp.add(row, Relation::Le, drop_max);
            }
            let sol = lp.solve().map_err(infeasible)?;
            let values = sol.x.clone();
            (sol, values)
        }
    };
    Ok(LpOutcome {
        value: solution.objective,
        profile: RadialProfileGrid { step, values },
        iterations: solution.iterations,
    })
}

fn infeasible(e: BoundsError) -> BoundsError {
    match e {
        BoundsError::Infeasible(msg) => {
            BoundsError::Infeasible(format!("mass unreachable under the grid constraints ({msg})"))
        }
        other => other,
    }
}
