//! Lower bounds for sums of eigenvalues of the Dirichlet Laplacian, the
//! Stokes operator and the Dirichlet bi-Laplacian.
//!
//! The bounds all come from one radial variational problem: minimise a
//! moment `∫|ξ|^p F(ξ) dξ` over profiles with `0 ≤ F ≤ M`, `|∇F| ≤ L` and
//! `∫F = m`. The exact minimiser is a plateau followed by a linear ramp, and
//! [`minimizer`] solves that problem in closed form for every dimension.
//! [`operator`] maps an operator and a domain onto the constants `M`, `L`
//! and evaluates the named bounds, [`geometry`] supplies `|Ω|` and the second
//! moment `I`, and [`verification`] holds the independent oracles (exact box
//! spectra, quadrature, a discretised LP, a rearrangement check).

pub mod cli;
pub mod error;
pub mod geometry;
pub mod minimizer;
pub mod operator;
pub mod verification;

pub use error::{BoundsError, Result};
pub use geometry::{DomainShape, ShapeDocument};
pub use minimizer::{DimensionConstants, MinimizationInput, MinimizerProfile, ScaledMass};
pub use operator::{BoundReport, GeometrySummary, OperatorKind};
