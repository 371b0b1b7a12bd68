use thiserror::Error;

use crate::partition::PartitionError;

#[derive(Debug, Error)]
pub enum HlqError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("{0} is not a horizontal strip")]
    NotStrip(String),
    #[error("series has no invertible constant term")]
    NonUnit,
    #[error("polynomial division left a remainder")]
    InexactDivision,
    #[error("symmetrization did not cancel to a polynomial")]
    NonCancellation,
    #[error("denominator vanishes at the evaluation point")]
    ZeroDenominator,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, HlqError>;
