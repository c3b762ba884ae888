//! Independent oracles: exact box spectra, numerical quadrature, a
//! discretised LP for the radial problem, a discrete rearrangement check, and
//! an end-to-end audit that ties them to the bounds.

mod audit;
mod lp;
mod quadrature;
mod rearrangement;
pub mod simplex;
mod spectrum;

pub use audit::{audit, audit_with_spectrum, AuditReport, AuditRow};
pub use lp::{lp_minimize, lp_minimize_with, LpFormulation, LpOutcome, RadialProfileGrid};
pub use quadrature::{adaptive_simpson, quadrature_moment};
pub use rearrangement::{rearrangement_moment_check, RearrangementCheck};
pub use spectrum::{
    box_spectrum, box_spectrum_with_workers, SpectrumSample, SpectrumSource,
};
