//! Finite-field experiments on the quadric fibration and conic bundle
//! attached to GM data.

pub mod census;
pub mod contact;
pub mod discriminant;
pub mod geometry;
pub mod instance;
pub mod strata;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FibrationError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("no generic instance after {cap} retries")]
    RetryCapExceeded { cap: usize },
    #[error("chart {0} out of range")]
    InvalidChart(usize),
    #[error("bordered determinant does not leave a sextic; factor degrees {factor_degrees:?}")]
    DiscriminantFactor { factor_degrees: Vec<u32> },
    #[error("identity '{case}' fails: {difference}")]
    IdentityFailure { case: String, difference: String },
    #[error("point must be a nonzero vector of residues of the right length")]
    InvalidPoint,
}
