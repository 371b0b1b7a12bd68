//! The defining symmetrization formula, kept as an independent oracle for the
//! branching construction. Cost grows like `n!`.

use std::collections::BTreeSet;

use super::branching::HLPolynomial;
use crate::error::Result;
use crate::partition::Partition;
use crate::qalgebra::{DegreeBound, LaurentQ, MultiSeries};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out.sort();
    out
}

fn sign(perm: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `P_λ(x_1..x_n)` from the sum over `S_n/S_n^λ`.
///
/// Multiplying by the Vandermonde product `Δ = ∏_{i<j}(x_i - x_j)` turns each
/// summand into `sgn(w) w(G)` with the polynomial
/// `G = x^λ ∏_{λ_i>λ_j}(x_i - q x_j) ∏_{i<j, λ_i=λ_j}(x_i - x_j)`; the sum is
/// then divided exactly by every `x_i - x_j`, and a remainder reports failed
/// cancellation.
pub fn hl_p_symmetrization(lambda: &Partition, n: usize) -> Result<HLPolynomial> {
    let unbounded = DegreeBound::unbounded();
    if lambda.len() > n {
        return Ok(HLPolynomial {
            partition: lambda.clone(),
            num_vars: n,
            value: MultiSeries::zero(n, DegreeBound::total(lambda.weight() as u32), None),
        });
    }
    let parts: Vec<u32> = (1..=n).map(|i| lambda.part(i) as u32).collect();
    let var = |i: usize, c: LaurentQ| {
        let mut m = vec![0; n];
        m[i] = 1;
        MultiSeries::monomial(n, unbounded.clone(), None, m, c)
    };
    let mut g = MultiSeries::monomial(n, unbounded.clone(), None, parts.clone(), LaurentQ::one());
    for i in 0..n {
        for j in i + 1..n {
            let factor = if parts[i] > parts[j] {
                var(i, LaurentQ::one()).sub(&var(j, LaurentQ::q_pow(1)))
            } else {
                var(i, LaurentQ::one()).sub(&var(j, LaurentQ::one()))
            };
            g = g.mul(&factor);
        }
    }
    let mut seen = BTreeSet::new();
    let mut total = MultiSeries::zero(n, unbounded.clone(), None);
    for w in permutations(n) {
        // w acts by x_i → x_{w(i)}; one representative per image of x^λ
        let mut image = vec![0; n];
        for (i, &p) in parts.iter().enumerate() {
            image[w[i]] = p;
        }
        if !seen.insert(image) {
            continue;
        }
        let term = g.permute_vars(&w).scale(&LaurentQ::constant(sign(&w)));
        total.add_assign(&term);
    }
    for i in 0..n {
        for j in i + 1..n {
            total = total.div_var_difference(i, j)?;
        }
    }
    Ok(HLPolynomial {
        partition: lambda.clone(),
        num_vars: n,
        value: total.with_bound(DegreeBound::total(lambda.weight() as u32)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hallittlewood::branching::hl_p;

    #[test]
    fn agrees_with_branching_small() {
        for s in ["1", "2", "2,1", "1,1", "3,1"] {
            let l: Partition = s.parse().unwrap();
            for n in 1..=3 {
                let a = hl_p_symmetrization(&l, n).unwrap().value;
                let b = hl_p(&l, n, None).value;
                assert_eq!(a, b, "{s} n={n}");
            }
        }
    }

    #[test]
    fn one_box_is_elementary() {
        let p = hl_p_symmetrization(&"1".parse().unwrap(), 3).unwrap().value;
        assert_eq!(p.len(), 3);
        for m in p.terms().keys() {
            assert_eq!(m.iter().sum::<u32>(), 1);
        }
    }

    #[test]
    fn sign_and_perms() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(sign(&[1, 0, 2]), -1);
        assert_eq!(sign(&[1, 2, 0]), 1);
    }
}
