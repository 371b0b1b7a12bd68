//! Closed forms for principal specializations.

use crate::partition::Partition;
use crate::qalgebra::pochhammer::qpoch_base;
use crate::qalgebra::{b_lambda, LaurentQ, RationalQ};

/// `P_λ(1, q, …, q^{n-1}) = q^{n(λ)} (q;q)_n / ((q;q)_{n-ℓ(λ)} b_λ(q))`, zero
/// when `ℓ(λ) > n`.
pub fn spec_principal_p(lambda: &Partition, n: usize) -> RationalQ {
    if lambda.len() > n {
        return RationalQ::zero();
    }
    let num = qpoch_base(1, 1, n).shift(lambda.n_stat() as i64);
    let den = &qpoch_base(1, 1, n - lambda.len()) * &b_lambda(lambda);
    RationalQ::new(num, den).expect("nonzero denominator")
}

/// `P_λ(z, zq, …, zq^{n-1})` as the pair `(|λ|, value)` meaning
/// `z^{|λ|} · value`.
pub fn spec_principal_p_scaled(lambda: &Partition, n: usize) -> (usize, RationalQ) {
    (lambda.weight(), spec_principal_p(lambda, n))
}

/// `Q_λ(1, q, q², …) = q^{n(λ)}`.
pub fn spec_principal_q_infinite(lambda: &Partition) -> LaurentQ {
    LaurentQ::q_pow(lambda.n_stat() as i64)
}
