//! The single-variable skew coefficients `ψ_{λ/μ}` and `φ_{λ/μ}`.

use crate::error::{HlqError, Result};
use crate::partition::{column_differences, is_horizontal_strip, Partition};
use crate::qalgebra::LaurentQ;

fn strip_columns(lambda: &Partition, mu: &Partition) -> Result<Vec<usize>> {
    if !is_horizontal_strip(lambda, mu) {
        return Err(HlqError::NotStrip(format!("{lambda}/{mu}")));
    }
    // one trailing zero so that θ'_{j+1} is defined for every relevant j
    Ok(column_differences(lambda, mu, lambda.first() + 1))
}

/// `ψ_{λ/μ}(q) = ∏_{j ∈ J} (1 - q^{m_j(μ)})` with `J` the columns `j` where
/// `θ'_j = 0` and `θ'_{j+1} = 1`.
pub fn psi_coeff(lambda: &Partition, mu: &Partition) -> Result<LaurentQ> {
    let theta = strip_columns(lambda, mu)?;
    let mut acc = LaurentQ::one();
    for j in 1..theta.len() {
        if theta[j - 1] == 0 && theta[j] == 1 {
            acc = &acc * &LaurentQ::one_minus(1, mu.multiplicity(j) as i64);
        }
    }
    Ok(acc)
}

/// `φ_{λ/μ}(q) = ∏_{i ∈ I} (1 - q^{m_i(λ)})` with `I` the columns `i` where
/// `θ'_i = 1` and `θ'_{i+1} = 0`.
pub fn phi_coeff(lambda: &Partition, mu: &Partition) -> Result<LaurentQ> {
    let theta = strip_columns(lambda, mu)?;
    let mut acc = LaurentQ::one();
    for i in 1..theta.len() {
        if theta[i - 1] == 1 && theta[i] == 0 {
            acc = &acc * &LaurentQ::one_minus(1, lambda.multiplicity(i) as i64);
        }
    }
    Ok(acc)
}

/// `P_{λ/μ}(x)` in one variable as `(ψ_{λ/μ}, |λ - μ|)`, or `None` when
/// `λ - μ` is not a horizontal strip (the value is then zero).
pub fn skew_p_single(lambda: &Partition, mu: &Partition) -> Option<(LaurentQ, usize)> {
    psi_coeff(lambda, mu).ok().map(|c| (c, lambda.weight() - mu.weight()))
}

/// `Q_{λ/μ}(x)` in one variable as `(φ_{λ/μ}, |λ - μ|)`, or `None` for zero.
pub fn skew_q_single(lambda: &Partition, mu: &Partition) -> Option<(LaurentQ, usize)> {
    phi_coeff(lambda, mu).ok().map(|c| (c, lambda.weight() - mu.weight()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::b_lambda;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let lambda = p("5,3,2,2");
        let mu = p("3,3,2");
        assert_eq!(phi_coeff(&lambda, &mu).unwrap(), &LaurentQ::one_minus(1, 2) * &LaurentQ::one_minus(1, 1));
        assert_eq!(psi_coeff(&lambda, &mu).unwrap(), LaurentQ::one_minus(1, 2));
    }

    #[test]
    fn trivial_and_brute_force_cases() {
        let l = p("4,2,1");
        assert!(psi_coeff(&l, &l).unwrap().is_one());
        assert!(phi_coeff(&l, &l).unwrap().is_one());
        // λ=(2,1), μ=(1,1): θ' = (0,1), J = {1}, m_1(μ) = 2
        assert_eq!(psi_coeff(&p("2,1"), &p("1,1")).unwrap(), LaurentQ::one_minus(1, 2));
        let l = p("2,2,1");
        assert_eq!(phi_coeff(&l, &Partition::empty()).unwrap_or_default(), LaurentQ::zero());
        assert!(phi_coeff(&l, &Partition::empty()).is_err());
        // φ_{λ/0} = b_λ whenever λ is a single row or a column of one box each
        let l = p("3");
        assert_eq!(phi_coeff(&l, &Partition::empty()).unwrap(), b_lambda(&l));
    }

    #[test]
    fn single_variable_values() {
        let (c, n) = skew_p_single(&p("6,3,3,1"), &p("4,3,1")).unwrap();
        assert_eq!(n, 5);
        assert_eq!(c, psi_coeff(&p("6,3,3,1"), &p("4,3,1")).unwrap());
        assert_eq!(skew_p_single(&p("2,1"), &p("2,1")), Some((LaurentQ::one(), 0)));
        assert!(skew_p_single(&p("2,2"), &Partition::empty()).is_none());
        assert!(skew_q_single(&p("2,2"), &Partition::empty()).is_none());
    }
}
