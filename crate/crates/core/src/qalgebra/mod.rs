//! Exact arithmetic kernels: Laurent polynomials in `q`, truncated
//! multivariate series, rational functions, q-Pochhammer builders and exact
//! evaluation at rational points.

pub mod eval;
pub mod laurent;
pub mod multilaurent;
pub mod pochhammer;
pub mod rational;
pub mod series;

pub use eval::{PointSampler, RationalPoint};
pub use laurent::LaurentQ;
pub use multilaurent::MultiLaurent;
pub use pochhammer::{b_lambda, eta_quotient, qbinom, qpoch, qpoch_at, InverseQpochTable};
pub use rational::RationalQ;
pub use series::{DegreeBound, Mono, MultiSeries};
