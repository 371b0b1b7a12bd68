//! Exact arithmetic for Hall-Littlewood polynomials and q-series, together
//! with a harness that checks a catalog of sum/product identities either
//! exactly or as truncated series with certified bounds.

pub mod error;
pub mod hallittlewood;
pub mod identities;
pub mod parallel;
pub mod partition;
pub mod qalgebra;

pub use error::{HlqError, Result};
pub use partition::{Partition, StripMask};
pub use qalgebra::{LaurentQ, MultiSeries, RationalQ};
