//! Hall's q-series identity with a linear exponent correction, for finite `n`
//! and in the limit `n → ∞`. Both forms are exact identities of rational
//! functions in `q` and are compared in canonical form.

use crate::error::{HlqError, Result};
use crate::identities::report::{Checker, VerifyReport};
use crate::partition::{enumerate_partitions, Partition};
use crate::qalgebra::pochhammer::qpoch_base;
use crate::qalgebra::{b_lambda, qbinom, qpoch, LaurentQ, RationalQ};

fn exponent(lambda: &Partition, j: usize) -> i64 {
    lambda.dot(lambda) as i64 - (1..=j).map(|l| lambda.part(l) as i64).sum::<i64>()
}

/// `Σ_{λ⊢k} q^{⟨λ,λ⟩ - Σ_{l≤j} λ_l} (q;q)_n / ((q;q)_{n-λ_1} b_{λ'})`, or the
/// `n → ∞` sum without the Pochhammer ratio.
pub fn hall_lhs(k: usize, j: usize, n: Option<usize>) -> RationalQ {
    let mut acc = RationalQ::zero();
    for lambda in enumerate_partitions(k, None, None) {
        let num = match n {
            // (q;q)_n/(q;q)_{n-λ1} = (q^{n-λ1+1};q)_{λ1}, zero once λ1 > n
            Some(n) => qpoch_base(n as i64 - lambda.first() as i64 + 1, 1, lambda.first()),
            None => LaurentQ::one(),
        };
        let term =
            RationalQ::new(num.shift(exponent(&lambda, j)), b_lambda(&lambda.conjugate())).expect("b_λ is nonzero");
        acc = &acc + &term;
    }
    acc
}

/// `[n+k-1, k] - (1-q^n)[n+k-j-1, k-j-1]`, or `1/(q;q)_k - 1/(q;q)_{k-j-1}`.
pub fn hall_rhs(k: usize, j: usize, n: Option<usize>) -> RationalQ {
    let (k, j) = (k as i64, j as i64);
    match n {
        Some(n) => {
            let n = n as i64;
            let v = &qbinom(n + k - 1, k) - &(&LaurentQ::one_minus(1, n) * &qbinom(n + k - j - 1, k - j - 1));
            RationalQ::from(v)
        }
        None => {
            let inv = |m: i64| -> RationalQ {
                if m < 0 {
                    RationalQ::zero()
                } else {
                    RationalQ::new(LaurentQ::one(), qpoch(m).expect("m >= 0")).expect("nonzero")
                }
            };
            &inv(k) - &inv(k - j - 1)
        }
    }
}

pub fn verify_hall(k: usize, j: usize, n: Option<usize>, seed: u64) -> Result<VerifyReport> {
    if j > k {
        return Err(HlqError::InvalidParameter(format!("need j <= k, got j={j}, k={k}")));
    }
    let mut c = Checker::new("hall.linear", seed).param("k", k).param("j", j).param(
        "n",
        match n {
            Some(n) => serde_json::json!(n),
            None => serde_json::json!("inf"),
        },
    );
    c.bound("mode", "exact rational functions");
    c.exact("", &hall_lhs(k, j, n), &hall_rhs(k, j, n));
    Ok(c.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(hall_lhs(0, 0, Some(3)), RationalQ::one());
        // k=1, j=0, n=3: q(1-q³)/(1-q) on the left, [3,1] - (1-q³)[2,0] on the right
        let expect = RationalQ::from(LaurentQ::from_i64s(1, &[1, 1, 1]));
        assert_eq!(hall_lhs(1, 0, Some(3)), expect);
        assert_eq!(hall_rhs(1, 0, Some(3)), expect);
        for k in 0..=4 {
            for j in 0..=k {
                for n in 0..=4 {
                    assert!(verify_hall(k, j, Some(n), 0).unwrap().passed(), "k={k} j={j} n={n}");
                }
                assert!(verify_hall(k, j, None, 0).unwrap().passed(), "k={k} j={j} inf");
            }
        }
    }

    #[test]
    fn limit_needs_the_running_index() {
        // with j·λ_j in place of Σ_{l≤j} λ_l the limit form breaks
        let (k, j) = (3, 2);
        let mut acc = RationalQ::zero();
        for lambda in enumerate_partitions(k, None, None) {
            let e = lambda.dot(&lambda) as i64 - (j * lambda.part(j)) as i64;
            acc = &acc + &RationalQ::new(LaurentQ::q_pow(e), b_lambda(&lambda.conjugate())).unwrap();
        }
        assert_ne!(acc, hall_rhs(k, j, None));
    }
}
