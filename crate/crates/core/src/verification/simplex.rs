//! Dense two-phase primal simplex with bounded variables.
//!
//! Solves `min cᵀx` subject to rows `aᵢᵀx {≤, =, ≥} bᵢ` and `0 ≤ x ≤ u`
//! (`u` may be infinite). Upper bounds are handled implicitly: a nonbasic
//! variable sits at either bound, and a step may end in a bound flip instead
//! of a pivot. Intended for small problems (a few hundred columns).

use crate::error::{BoundsError, Result};

const EPS: f64 = 1e-11;
const MAX_ITER: usize = 50_000;
/// Consecutive degenerate steps before switching from Dantzig to Bland.
const DEGENERATE_SWITCH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct LinearProgram {
    pub objective: Vec<f64>,
    pub upper: Vec<f64>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub objective: f64,
    pub iterations: usize,
}

impl LinearProgram {
    /// `vars` variables with zero cost and no upper bound.
    pub fn new(vars: usize) -> Self {
        Self {
            objective: vec![0.0; vars],
            upper: vec![f64::INFINITY; vars],
            constraints: Vec::new(),
        }
    }

    pub fn add(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) {
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    pub fn solve(&self) -> Result<LpSolution> {
        Tableau::build(self)?.run(self)
    }
}

struct Tableau {
    rows: usize,
    cols: usize,
    /// `B⁻¹A`, row-major.
    t: Vec<f64>,
    xb: Vec<f64>,
    basis: Vec<usize>,
    at_upper: Vec<bool>,
    upper: Vec<f64>,
    first_artificial: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Result<Self> {
        let n = lp.objective.len();
        if lp.upper.len() != n {
            return Err(BoundsError::InvalidInput("upper bounds do not match variables".into()));
        }
        if lp.upper.iter().any(|u| !(*u >= 0.0)) {
            return Err(BoundsError::InvalidInput("upper bounds must be nonnegative".into()));
        }
        for c in &lp.constraints {
            if c.coeffs.len() != n {
                return Err(BoundsError::InvalidInput("constraint width does not match variables".into()));
            }
        }
        let rows = lp.constraints.len();
        let slacks = lp.constraints.iter().filter(|c| c.relation != Relation::Eq).count();
        // Each row gets an artificial unless its slack can start basic.
        let mut needs_art = Vec::with_capacity(rows);
        for c in &lp.constraints {
            let flip = c.rhs < 0.0;
            let slack_sign = match c.relation {
                Relation::Le => 1.0,
                Relation::Ge => -1.0,
                Relation::Eq => 0.0,
            } * if flip { -1.0 } else { 1.0 };
            needs_art.push(slack_sign <= 0.0);
        }
        let arts = needs_art.iter().filter(|a| **a).count();
        let first_artificial = n + slacks;
        let cols = first_artificial + arts;
        let mut t = vec![0.0; rows * cols];
        let mut xb = vec![0.0; rows];
        let mut basis = vec![0; rows];
        let (mut s_col, mut a_col) = (n, first_artificial);
        for (i, c) in lp.constraints.iter().enumerate() {
            let sign = if c.rhs < 0.0 { -1.0 } else { 1.0 };
            let row = &mut t[i * cols..(i + 1) * cols];
            for (r, a) in row.iter_mut().zip(&c.coeffs) {
                *r = sign * a;
            }
            xb[i] = sign * c.rhs;
            if c.relation != Relation::Eq {
                row[s_col] = sign * if c.relation == Relation::Le { 1.0 } else { -1.0 };
                if !needs_art[i] {
                    basis[i] = s_col;
                }
                s_col += 1;
            }
            if needs_art[i] {
                row[a_col] = 1.0;
                basis[i] = a_col;
                a_col += 1;
            }
        }
        let mut upper = lp.upper.clone();
        upper.resize(cols, f64::INFINITY);
        Ok(Self {
            rows,
            cols,
            t,
            xb,
            basis,
            at_upper: vec![false; cols],
            upper,
            first_artificial,
        })
    }

    fn run(mut self, lp: &LinearProgram) -> Result<LpSolution> {
        let mut iterations = 0;
        if self.first_artificial < self.cols {
            let mut phase1 = vec![0.0; self.cols];
            phase1[self.first_artificial..].iter_mut().for_each(|c| *c = 1.0);
            iterations += self.optimize(&phase1)?;
            let infeas: f64 = (0..self.rows)
                .filter(|&i| self.basis[i] >= self.first_artificial)
                .map(|i| self.xb[i])
                .sum();
            let scale = 1.0 + lp.constraints.iter().map(|c| c.rhs.abs()).fold(0.0, f64::max);
            if infeas > 1e-9 * scale {
                return Err(BoundsError::Infeasible(format!("phase one ended with residual {infeas:e}")));
            }
            // Artificials may stay basic at zero but never move again.
            for j in self.first_artificial..self.cols {
                self.upper[j] = 0.0;
            }
        }
        let mut cost = lp.objective.clone();
        cost.resize(self.cols, 0.0);
        iterations += self.optimize(&cost)?;

        let n = lp.objective.len();
        let mut x: Vec<f64> = (0..n)
            .map(|j| if self.at_upper[j] { self.upper[j] } else { 0.0 })
            .collect();
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.xb[i].clamp(0.0, self.upper[b]);
            }
        }
        let objective = x.iter().zip(&lp.objective).map(|(a, c)| a * c).sum();
        Ok(LpSolution { x, objective, iterations })
    }

    fn reduced_costs(&self, cost: &[f64]) -> Vec<f64> {
        let mut d = cost.to_vec();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = cost[b];
            if cb != 0.0 {
                let row = &self.t[i * self.cols..(i + 1) * self.cols];
                for (dj, tj) in d.iter_mut().zip(row) {
                    *dj -= cb * tj;
                }
            }
        }
        d
    }

    fn optimize(&mut self, cost: &[f64]) -> Result<usize> {
        let mut d = self.reduced_costs(cost);
        let mut is_basic = vec![false; self.cols];
        for &b in &self.basis {
            is_basic[b] = true;
        }
        let mut degenerate_run = 0;
        for iter in 0..MAX_ITER {
            let bland = degenerate_run >= DEGENERATE_SWITCH;
            let mut entering: Option<(usize, f64)> = None;
            for j in 0..self.cols {
                if is_basic[j] || self.upper[j] == 0.0 {
                    continue;
                }
                let gain = if self.at_upper[j] { d[j] } else { -d[j] };
                if gain > EPS && entering.is_none_or(|(_, g)| !bland && gain > g) {
                    entering = Some((j, gain));
                    if bland {
                        break;
                    }
                }
            }
            let Some((j, _)) = entering else {
                return Ok(iter);
            };
            let dir = if self.at_upper[j] { -1.0 } else { 1.0 };

            // ratio test
            let mut theta = self.upper[j];
            let mut leave: Option<(usize, bool)> = None;
            for i in 0..self.rows {
                let a = dir * self.t[i * self.cols + j];
                let b = self.basis[i];
                let limit = if a > EPS {
                    Some((self.xb[i].max(0.0) / a, false))
                } else if a < -EPS && self.upper[b].is_finite() {
                    Some(((self.upper[b] - self.xb[i]).max(0.0) / -a, true))
                } else {
                    None
                };
                if let Some((r, to_upper)) = limit {
                    // ties go to the lowest basic index
                    let tie_wins = match leave {
                        None => true,
                        Some((k, _)) => b < self.basis[k],
                    };
                    if r < theta - EPS || (r <= theta + EPS && tie_wins) {
                        theta = r;
                        leave = Some((i, to_upper));
                    }
                }
            }
            if !theta.is_finite() {
                return Err(BoundsError::Unbounded);
            }
            degenerate_run = if theta <= EPS { degenerate_run + 1 } else { 0 };

            for i in 0..self.rows {
                self.xb[i] -= dir * theta * self.t[i * self.cols + j];
            }
            match leave {
                None => {
                    self.at_upper[j] = !self.at_upper[j];
                }
                Some((r, to_upper)) => {
                    let out = self.basis[r];
                    let entering_value = if self.at_upper[j] { self.upper[j] - theta } else { theta };
                    self.pivot(r, j, &mut d);
                    self.xb[r] = entering_value;
                    self.basis[r] = j;
                    is_basic[j] = true;
                    is_basic[out] = false;
                    self.at_upper[j] = false;
                    self.at_upper[out] = to_upper;
                }
            }
        }
        Err(BoundsError::NoConvergence {
            iterations: MAX_ITER,
            last: f64::NAN,
        })
    }

    fn pivot(&mut self, r: usize, j: usize, d: &mut [f64]) {
        let cols = self.cols;
        let p = self.t[r * cols + j];
        for v in &mut self.t[r * cols..(r + 1) * cols] {
            *v /= p;
        }
        let pivot_row: Vec<f64> = self.t[r * cols..(r + 1) * cols].to_vec();
        for i in 0..self.rows {
            if i == r {
                continue;
            }
            let f = self.t[i * cols + j];
            if f != 0.0 {
                for (v, pr) in self.t[i * cols..(i + 1) * cols].iter_mut().zip(&pivot_row) {
                    *v -= f * pr;
                }
            }
        }
        let f = d[j];
        if f != 0.0 {
            for (v, pr) in d.iter_mut().zip(&pivot_row) {
                *v -= f * pr;
            }
        }
    }
}
