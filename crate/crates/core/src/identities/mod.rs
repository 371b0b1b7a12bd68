//! Verification routines: each compares the two sides of an identity through
//! independent pipelines and returns a [`VerifyReport`].

pub mod bailey;
pub mod bounded;
pub mod deformed;
pub mod hall;
pub mod pid;
pub mod proof;
pub mod report;
pub mod ring;
pub mod rr;
pub mod strips;

pub use report::{Checker, Mismatch, Status, TruncationPlan, VerifyReport};
