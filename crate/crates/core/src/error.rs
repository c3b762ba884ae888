use thiserror::Error;

pub type Result<T, E = BoundsError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension {0} is not supported here (need n >= 2)")]
    Dimension(usize),

    /// `solve_t` is only defined for `m_* >= 1`.
    #[error("scaled mass {0} is below 1; no plateau root exists")]
    ScaledMassBelowOne(f64),

    #[error("{operator} is not supported in dimension {n}: {reason}")]
    Unsupported {
        operator: String,
        n: usize,
        reason: String,
    },

    #[error("degenerate shape: {0}")]
    DegenerateShape(String),

    #[error("root solver did not converge after {iterations} iterations (last t = {last})")]
    NoConvergence { iterations: usize, last: f64 },

    #[error("lattice enumeration exceeded the budget of {0} points")]
    EnumerationBudget(usize),

    #[error("linear program is infeasible: {0}")]
    Infeasible(String),

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("bound ordering violated at m = {m}: {detail}")]
    Violation { m: usize, detail: String },

    #[error("parse error: {0}")]
    Parse(String),
}
