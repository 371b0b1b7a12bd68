//! Hall-Littlewood polynomials `P_λ`, `Q_λ` and their skew versions, built by
//! single-variable branching over horizontal strips, plus the closed-form
//! specializations and the `(q,t)` hook and strip coefficients.

pub mod branching;
pub mod macdonald;
pub mod specialize;
pub mod strip;
pub mod symmetrize;

pub use branching::{eval_p_all, hl_p, hl_q, p_table, skew_table, Family, HLPolynomial, VarLayout};
pub use macdonald::{macdonald_cprime, macdonald_phi, macdonald_psi, BiPoly, BiRational, MacdonaldSquareData};
pub use specialize::{spec_principal_p, spec_principal_p_scaled, spec_principal_q_infinite};
pub use strip::{phi_coeff, psi_coeff, skew_p_single, skew_q_single};
pub use symmetrize::hl_p_symmetrization;
