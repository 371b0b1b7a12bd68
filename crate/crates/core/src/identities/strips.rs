//! The single-variable strip coefficients against Hall-Littlewood
//! polynomials built by symmetrization.

use crate::error::{HlqError, Result};
use crate::hallittlewood::{hl_p_symmetrization, phi_coeff, psi_coeff};
use crate::identities::report::{Checker, VerifyReport};
use crate::partition::{is_horizontal_strip, Partition};
use crate::qalgebra::{b_lambda, DegreeBound, MultiSeries};

/// Coefficient of `y^r` in `P_λ(x_1..x_n, y)`.
fn y_coefficient(lambda: &Partition, n: usize, r: usize) -> Result<MultiSeries> {
    let full = hl_p_symmetrization(lambda, n + 1)?.value;
    let mut out = MultiSeries::zero(n, DegreeBound::unbounded(), None);
    for (m, c) in full.terms() {
        if m[n] as usize == r {
            out.add_term(m[..n].to_vec(), c.clone());
        }
    }
    Ok(out)
}

/// `Σ ψ_{λ/μ} P_μ(x_1..x_n)` over strips `λ/μ` of size `r`.
fn strip_expansion(lambda: &Partition, n: usize, r: usize) -> Result<MultiSeries> {
    let mut acc = MultiSeries::zero(n, DegreeBound::unbounded(), None);
    for mu in crate::partition::strips_under(lambda) {
        if lambda.weight() - mu.weight() != r || mu.len() > n {
            continue;
        }
        let p = hl_p_symmetrization(&mu, n)?.value;
        acc.add_assign(&p.scale(&psi_coeff(lambda, &mu)?));
    }
    Ok(acc)
}

/// `φ_{λ/μ} b_μ = ψ_{λ/μ} b_λ`, and the one-variable branching of `P_λ` in
/// `ℓ(λ) + 1` variables at `y^{|λ-μ|}` reproduced from `ψ`.
pub fn verify_strip_coefficients(lambda: &Partition, mu: &Partition, seed: u64) -> Result<VerifyReport> {
    if !is_horizontal_strip(lambda, mu) {
        return Err(HlqError::NotStrip(format!("{lambda}/{mu}")));
    }
    let mut c = Checker::new("hl.strip", seed).param("lambda", lambda).param("mu", mu);
    let (phi, psi) = (phi_coeff(lambda, mu)?, psi_coeff(lambda, mu)?);
    c.bound("phi", phi.to_string());
    c.bound("psi", psi.to_string());
    c.laurent("phi b_mu vs psi b_lambda", &(&phi * &b_lambda(mu)), &(&psi * &b_lambda(lambda)));
    let n = lambda.len();
    let r = lambda.weight() - mu.weight();
    c.bound("branch_vars", n + 1);
    let lhs = y_coefficient(lambda, n, r)?;
    let rhs = strip_expansion(lambda, n, r)?;
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    c.series(&lhs, &rhs, &names);
    Ok(c.finish())
}
