//! Sum-side and product-side q-series of Rogers–Ramanujan type: the classical
//! pair, the rank-two triple of expressions, the rank-two Macdonald identity
//! under principal-type specializations and the three modulus families.

use serde::Serialize;

use crate::error::{HlqError, Result};
use crate::identities::bounded::{inv_b, partitions_by_norm};
use crate::identities::report::{Checker, TruncationPlan, VerifyReport};
use crate::parallel;
use crate::partition::Partition;
use crate::qalgebra::pochhammer::{eta_quotient, infinite_product, qbinom_base, ProductFactor};
use crate::qalgebra::{qbinom, qpoch, InverseQpochTable, LaurentQ, MultiLaurent};

fn check_cap(cap: i64) -> Result<()> {
    if cap < 0 {
        return Err(HlqError::InvalidParameter("q-order must be non-negative".into()));
    }
    Ok(())
}

fn quad(n1: i64, n2: i64) -> i64 {
    n1 * n1 - n1 * n2 + n2 * n2
}

/// Pairs with `n1² - n1 n2 + n2² ≤ cap`; that form is at least
/// `(n1² + n2²)/2`, so `n_i ≤ √(2 cap)` covers them all.
fn pairs(cap: i64) -> Vec<(i64, i64)> {
    let top = ((2 * cap) as f64).sqrt() as i64 + 1;
    let mut out = Vec::new();
    for n1 in 0..=top {
        for n2 in 0..=top {
            if quad(n1, n2) <= cap {
                out.push((n1, n2));
            }
        }
    }
    out
}

/// `Σ q^{n1²-n1n2+n2²} / ((q)_{n1} (q)_{n2} (q)_{n1+n2})` through `q^cap`.
pub fn rr_pair_sum(cap: i64) -> LaurentQ {
    let ps = pairs(cap);
    let top = ps.iter().map(|&(a, b)| a + b).max().unwrap_or(0);
    let t = InverseQpochTable::new(top as usize, cap);
    parallel::map_sum(
        &ps,
        LaurentQ::zero(),
        |&(n1, n2)| {
            let c = cap - quad(n1, n2);
            t.get(n1).mul_trunc(&t.get(n2), c).mul_trunc(&t.get(n1 + n2), c).shift(quad(n1, n2))
        },
        |a, b| &a + &b,
    )
}

/// `(q;q)_∞` times the pair sum.
pub fn rr_e1(cap: i64) -> LaurentQ {
    eta_quotient(1, &[(1, 1)], cap).mul_trunc(&rr_pair_sum(cap), cap)
}

/// `Σ q^{n1²-n1n2+n2²} [2n1, n2] / (q)_{n1}`.
pub fn rr_e2(cap: i64) -> LaurentQ {
    let ps = pairs(cap);
    let top = ps.iter().map(|&(a, _)| a).max().unwrap_or(0);
    let t = InverseQpochTable::new(top as usize, cap);
    parallel::map_sum(
        &ps,
        LaurentQ::zero(),
        |&(n1, n2)| t.get(n1).mul_trunc(&qbinom(2 * n1, n2), cap - quad(n1, n2)).shift(quad(n1, n2)),
        |a, b| &a + &b,
    )
}

/// `1/∏(1-q^{7n-1})²(1-q^{7n-3})(1-q^{7n-4})(1-q^{7n-6})²`.
pub fn rr_e3(cap: i64) -> LaurentQ {
    eta_quotient(7, &[(1, -2), (3, -1), (4, -1), (6, -2)], cap)
}

fn pair_plan(cap: i64) -> TruncationPlan {
    let top = ((2 * cap) as f64).sqrt() as usize + 1;
    TruncationPlan {
        x_degree: None,
        q_min: Some(0),
        q_max: Some(cap),
        max_weights: vec![top, top],
        derivation: "n1²-n1n2+n2² ≥ (n1²+n2²)/2 and every other factor is a power series in q, \
                     so pairs with exponent above the cap contribute nothing below it"
            .into(),
    }
}

pub fn verify_rr_a2(cap: i64, seed: u64) -> Result<VerifyReport> {
    check_cap(cap)?;
    let mut c = Checker::new("rr.a2", seed).param("N", cap);
    c.plan(pair_plan(cap));
    let (e1, e2, e3) = (rr_e1(cap), rr_e2(cap), rr_e3(cap));
    c.qseries("E1-E2", &e1, &e2, cap);
    c.qseries("E2-E3", &e2, &e3, cap);
    c.qseries("E1-E3", &e1, &e3, cap);
    Ok(c.finish())
}

/// `Σ q^{n² + s n}/(q)_n` for `s ∈ {0, 1}`.
pub fn rr_classical_sum(shift: i64, cap: i64) -> LaurentQ {
    let top = ((cap as f64).sqrt() as i64) + 1;
    let t = InverseQpochTable::new(top as usize, cap);
    let mut acc = LaurentQ::zero();
    for n in 0..=top {
        let e = n * n + shift * n;
        if e <= cap {
            acc += &t.get(n).truncate(cap - e).shift(e);
        }
    }
    acc
}

pub fn verify_rr_classical(cap: i64, seed: u64) -> Result<VerifyReport> {
    check_cap(cap)?;
    let mut c = Checker::new("rr.classical", seed).param("N", cap);
    c.plan(TruncationPlan {
        x_degree: None,
        q_min: Some(0),
        q_max: Some(cap),
        max_weights: vec![(cap as f64).sqrt() as usize + 1],
        derivation: "the n-th summand starts at q^{n²}".into(),
    });
    c.qseries("first", &rr_classical_sum(0, cap), &eta_quotient(5, &[(1, -1), (4, -1)], cap), cap);
    c.qseries("second", &rr_classical_sum(1, cap), &eta_quotient(5, &[(2, -1), (3, -1)], cap), cap);
    Ok(c.finish())
}

/// Which specialization of the rank-two Macdonald identity: `general(n)` sends
/// `q → q^{3n+1}` and `x_i → q^{n i}`; `modulus7` is `n = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MacdonaldInstance {
    Modulus7,
    General(i64),
}

impl MacdonaldInstance {
    pub fn rank_shift(self) -> i64 {
        match self {
            MacdonaldInstance::Modulus7 => 2,
            MacdonaldInstance::General(n) => n,
        }
    }
}

/// Specialized left side `Σ_{k1+k2+k3=0} ∏ x_i^{3k_i} Q^{3k_i²/2 - i k_i}
/// ∏_{i<j} (1 - x_j x_i^{-1} Q^{k_j-k_i})` with `Q = q^p`, `x_i = q^{n i}`.
/// Enumerates shells `max|k_i| = s` until a lower bound for every term of
/// the shell exceeds `cap`; returns the sum and the last shell used.
pub fn macdonald_theta(n: i64, cap: i64) -> (LaurentQ, i64) {
    let p = 3 * n + 1;
    // with max|k_i| = s: Σk² ≥ 3s²/2, |Σ i k_i| ≤ 6s and each factor
    // exponent is ≥ -2ps, so every term starts at or above this
    let floor = |s: i64| (9 * p * s * s) / 4 - 6 * s - 6 * p * s;
    let mut acc = LaurentQ::zero();
    let mut s = 0;
    loop {
        if s >= 2 && floor(s) > cap {
            break;
        }
        for k1 in -s..=s {
            for k2 in -s..=s {
                let k = [k1, k2, -k1 - k2];
                if k.iter().map(|x| x.abs()).max() != Some(s) {
                    continue;
                }
                let sq: i64 = k.iter().map(|x| x * x).sum();
                let lin: i64 = (0..3).map(|i| (i as i64 + 1) * k[i]).sum();
                // Σ 3 n i k_i + p(3/2 k_i² - i k_i) = (3p/2)Σk² - Σ i k_i
                let mut t = LaurentQ::q_pow(3 * p * sq / 2 - lin);
                for i in 0..3 {
                    for j in i + 1..3 {
                        t = &t * &LaurentQ::one_minus(1, n * (j - i) as i64 + p * (k[j] - k[i]));
                    }
                }
                acc += &t;
            }
        }
        s += 1;
    }
    (acc, s - 1)
}

/// `(Q;Q)²_∞ ∏_{i<j} (x_i^{-1} x_j, Q x_i x_j^{-1}; Q)_∞` under the same
/// specialization.
pub fn macdonald_product(n: i64, cap: i64) -> LaurentQ {
    let p = 3 * n + 1;
    let mut residues = vec![(p, 2)];
    for d in [1, 1, 2] {
        residues.push((n * d, 1));
        residues.push((p - n * d, 1));
    }
    eta_quotient(p, &residues, cap)
}

/// `Σ_{w∈S_3} ε(w) ∏ x_i^{i-w_i}` and `∏_{i<j} (1 - x_j x_i^{-1})`.
pub fn vandermonde_sides() -> (MultiLaurent, MultiLaurent) {
    const PERMS: [[i32; 3]; 6] = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
    let mut lhs = MultiLaurent::zero(3);
    for w in PERMS {
        let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count();
        let sign = if inv % 2 == 0 { 1 } else { -1 };
        lhs.add_term((0..3).map(|i| i as i32 + 1 - w[i]).collect(), sign.into());
    }
    let mut rhs = MultiLaurent::one(3);
    for i in 0..3 {
        for j in i + 1..3 {
            let mut e = vec![0; 3];
            e[j] = 1;
            e[i] = -1;
            let f = &MultiLaurent::one(3) - &MultiLaurent::monomial(3, e, 1.into());
            rhs = &rhs * &f;
        }
    }
    (lhs, rhs)
}

pub fn verify_vandermonde(seed: u64) -> Result<VerifyReport> {
    let mut c = Checker::new("vandermonde.a2", seed);
    c.bound("mode", "exact Laurent polynomials in x1 x2 x3");
    let (l, r) = vandermonde_sides();
    c.exact("", &l, &r);
    Ok(c.finish())
}

pub fn verify_macdonald_a2(cap: i64, instance: MacdonaldInstance, seed: u64) -> Result<VerifyReport> {
    check_cap(cap)?;
    let n = instance.rank_shift();
    if n < 1 {
        return Err(HlqError::InvalidParameter("the specialization needs n >= 1".into()));
    }
    let mut c = Checker::new("macdonald.a2", seed).param("N", cap).param("instance", instance);
    let (theta, shell) = macdonald_theta(n, cap);
    c.plan(TruncationPlan {
        x_degree: None,
        q_min: theta.min_exp().map(|e| e.min(0)),
        q_max: Some(cap),
        max_weights: vec![shell as usize],
        derivation: "shells max|k_i| = s are added until (9p/4)s² - 6s - 6ps, a lower bound for every \
                     exponent in the shell, exceeds the cap; the bound grows with s from s = 2 on"
            .into(),
    });
    c.bound("shells", shell);
    c.qseries("sum-product", &theta, &macdonald_product(n, cap), cap);
    // dividing by (q;q)³_∞ turns the theta side into the modulus-(3n+1)
    // pair sum over partitions of length < n
    let inv3 = infinite_product(&[ProductFactor { start: 1, step: 1, power: -3 }], cap);
    let lhs = family_lhs(n as usize, FamilyVariant::Plus, cap);
    c.qseries("sum/(q)^3-family", &theta.mul_trunc(&inv3, cap), &lhs, cap);
    let (vl, vr) = vandermonde_sides();
    c.exact("vandermonde", &vl, &vr);
    Ok(c.finish())
}

/// The modulus `3n+1`, `3n-1` or `3n` family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyVariant {
    #[serde(rename = "3n+1")]
    Plus,
    #[serde(rename = "3n-1")]
    Minus,
    #[serde(rename = "3n")]
    Zero,
}

impl FamilyVariant {
    pub fn id(self) -> &'static str {
        match self {
            FamilyVariant::Plus => "family.3n+1",
            FamilyVariant::Minus => "family.3n-1",
            FamilyVariant::Zero => "family.3n",
        }
    }

    pub fn modulus(self, n: i64) -> i64 {
        match self {
            FamilyVariant::Plus => 3 * n + 1,
            FamilyVariant::Minus => 3 * n - 1,
            FamilyVariant::Zero => 3 * n,
        }
    }
}

impl std::str::FromStr for FamilyVariant {
    type Err = HlqError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "3n+1" | "plus" => Ok(FamilyVariant::Plus),
            "3n-1" | "minus" => Ok(FamilyVariant::Minus),
            "3n" | "zero" => Ok(FamilyVariant::Zero),
            _ => Err(HlqError::InvalidParameter(format!("unknown family variant {s:?}"))),
        }
    }
}

/// Pair sum over `λ, μ` with at most `n-1` parts through `q^cap`.
pub fn family_lhs(n: usize, variant: FamilyVariant, cap: i64) -> LaurentQ {
    let len = n - 1;
    let t = InverseQpochTable::new(4 * cap as usize + 2, cap);
    let parts = partitions_by_norm(2 * cap as usize, Some(len));
    let data: Vec<(Partition, LaurentQ, i64)> = parts
        .into_iter()
        .map(|l| {
            let ib = inv_b(&l.conjugate(), &t);
            let last = l.part(len) as i64;
            (l, ib, last)
        })
        .collect();
    // the factor that only depends on (λ_{n-1}, μ_{n-1})
    let tail = |a: i64, b: i64| -> LaurentQ {
        match variant {
            FamilyVariant::Plus | FamilyVariant::Minus => t.get(a + b),
            FamilyVariant::Zero => {
                let num = qpoch(a).expect("a >= 0").mul_trunc(&qpoch(b).expect("b >= 0"), cap);
                let inv = t.get(a + b);
                num.mul_trunc(&inv, cap).mul_trunc(&inv, cap).mul_trunc(&qbinom_base(a + b, a, 3), cap)
            }
        }
    };
    parallel::map_sum(
        &data,
        LaurentQ::zero(),
        |(l, il, a)| {
            let mut acc = LaurentQ::zero();
            let ll = l.dot(l) as i64;
            for (m, im, b) in &data {
                let mut e = ll + m.dot(m) as i64 - l.dot(m) as i64;
                if variant == FamilyVariant::Minus {
                    e += 2 * a * b;
                }
                if e > cap {
                    continue;
                }
                let c = cap - e;
                acc += &il.mul_trunc(im, c).mul_trunc(&tail(*a, *b), c).shift(e);
            }
            acc
        },
        |a, b| &a + &b,
    )
}

/// The product side divided by `(q;q)³_∞`.
pub fn family_rhs(n: i64, variant: FamilyVariant, cap: i64) -> LaurentQ {
    let p = variant.modulus(n);
    let residues: Vec<(i64, i64)> = match variant {
        FamilyVariant::Plus => vec![(n, 2), (n + 1, 1), (2 * n, 1), (2 * n + 1, 2), (p, 2)],
        FamilyVariant::Minus => vec![(n - 1, 1), (n, 2), (2 * n - 1, 2), (2 * n, 1), (p, 2)],
        FamilyVariant::Zero => vec![(n, 3), (2 * n, 3), (p, 2)],
    };
    let mut factors: Vec<ProductFactor> =
        residues.into_iter().map(|(r, e)| ProductFactor { start: r, step: p, power: e }).collect();
    factors.push(ProductFactor { start: 1, step: 1, power: -3 });
    infinite_product(&factors, cap)
}

pub fn verify_modulus_family(n: usize, variant: FamilyVariant, cap: i64, seed: u64) -> Result<VerifyReport> {
    check_cap(cap)?;
    if n < 2 {
        return Err(HlqError::InvalidParameter("modulus families need n >= 2".into()));
    }
    let mut c = Checker::new(variant.id(), seed).param("n", n).param("N", cap);
    c.bound("modulus", variant.modulus(n as i64));
    c.plan(TruncationPlan {
        x_degree: None,
        q_min: Some(0),
        q_max: Some(cap),
        max_weights: vec![2 * cap as usize, 2 * cap as usize],
        derivation: "⟨λ,λ⟩+⟨μ,μ⟩-⟨λ,μ⟩ ≥ (⟨λ,λ⟩+⟨μ,μ⟩)/2, the extra exponent is non-negative and the \
                     remaining factors are power series, so pairs with ⟨λ,λ⟩+⟨μ,μ⟩ > 2N cannot reach q^N"
            .into(),
    });
    let lhs = family_lhs(n, variant, cap);
    let rhs = family_rhs(n as i64, variant, cap);
    c.qseries("", &lhs, &rhs, cap);
    if n == 2 && variant == FamilyVariant::Plus {
        let qinf = eta_quotient(1, &[(1, 1)], cap);
        c.qseries("(q)_inf*sum vs E1", &qinf.mul_trunc(&lhs, cap), &rr_e1(cap), cap);
        c.qseries("(q)_inf*product vs E3", &qinf.mul_trunc(&rhs, cap), &rr_e3(cap), cap);
    }
    Ok(c.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rr_triple() {
        let r = verify_rr_a2(30, 0).unwrap();
        assert!(r.passed(), "{:?}", r.first_mismatch);
        assert!(verify_rr_classical(30, 0).unwrap().passed());
        // 1/(q,q^4;q^5) = 1 + q + q^2 + q^3 + 2q^4 + ...
        assert_eq!(rr_classical_sum(0, 4), LaurentQ::from_i64s(0, &[1, 1, 1, 1, 2]));
    }

    #[test]
    fn macdonald_and_vandermonde() {
        let (l, r) = vandermonde_sides();
        assert_eq!(l, r);
        assert_eq!(l.term_count(), 6);
        for inst in [MacdonaldInstance::Modulus7, MacdonaldInstance::General(3)] {
            let rep = verify_macdonald_a2(30, inst, 0).unwrap();
            assert!(rep.passed(), "{inst:?}: {:?}", rep.first_mismatch);
        }
    }

    #[test]
    fn families() {
        for v in [FamilyVariant::Plus, FamilyVariant::Minus, FamilyVariant::Zero] {
            for n in 2..=3 {
                let rep = verify_modulus_family(n, v, 20, 0).unwrap();
                assert!(rep.passed(), "{v:?} n={n}: {:?}", rep.first_mismatch);
            }
        }
    }

    #[test]
    fn family_n2_is_the_pair_sum() {
        assert_eq!(family_lhs(2, FamilyVariant::Plus, 25), rr_pair_sum(25));
    }
}
