//! The two-alphabet Hall-Littlewood sum, its skew generalizations, the linear
//! exponent variant, and the Cauchy-type identities underneath them.
//!
//! Left sides come from branching tables summed over partition pairs; right
//! sides are expanded from their product kernels. Every monomial of total
//! degree at most `D` then has a finite Laurent polynomial coefficient, so the
//! comparisons below are exact.

use std::collections::BTreeMap;

use crate::error::{HlqError, Result};
use crate::hallittlewood::{hl_p, p_table, skew_table, Family};
use crate::identities::report::{Checker, TruncationPlan, VerifyReport};
use crate::identities::ring::{geometric_all, pid_kernel, ratio_factor, VarRing};
use crate::parallel;
use crate::partition::{subpartitions, Partition};
use crate::qalgebra::{DegreeBound, LaurentQ, MultiSeries};

/// `n(λ) + n(μ) - ⟨λ', μ'⟩`.
pub fn pid_exponent(lambda: &Partition, mu: &Partition) -> i64 {
    (lambda.n_stat() + mu.n_stat()) as i64 - lambda.conjugate().dot(&mu.conjugate()) as i64
}

fn degree_plan(d: u32, note: &str) -> TruncationPlan {
    TruncationPlan {
        x_degree: Some(d),
        q_min: Some(-((d * d) as i64)),
        q_max: None,
        max_weights: vec![d as usize],
        derivation: format!(
            "each summand is homogeneous in the alphabets, so monomials of total degree <= {d} only \
             receive terms of total weight <= {d}; {note}"
        ),
    }
}

fn ring_xy(n: usize, m: usize, d: u32) -> VarRing {
    VarRing::new(&[("x", n), ("y", m)], DegreeBound::total(d))
}

/// Sums `c(λ, μ) · A_λ · B_μ` over all pairs with total degree within bound.
fn pair_sum(
    ring: &VarRing,
    left: &BTreeMap<Partition, MultiSeries>,
    right: &BTreeMap<Partition, MultiSeries>,
    exponent: impl Fn(&Partition, &Partition) -> i64 + Sync + Send,
) -> MultiSeries {
    let pairs: Vec<(&Partition, &MultiSeries, &Partition, &MultiSeries)> =
        left.iter().flat_map(|(l, a)| right.iter().map(move |(m, b)| (l, a, m, b))).collect();
    parallel::map_sum(
        &pairs,
        ring.zero(),
        |(l, a, m, b)| a.mul(b).scale(&LaurentQ::q_pow(exponent(l, m))),
        |acc, t| acc.add(&t),
    )
}

fn skew_tables(
    ring: &VarRing,
    g: usize,
    family: Family,
    inner: &Partition,
    d: u32,
) -> BTreeMap<Partition, MultiSeries> {
    skew_table(family, inner, &ring.layout(g), d as usize)
}

fn check_dims(n: usize, d: u32) -> Result<()> {
    if n == 0 || d == 0 {
        return Err(HlqError::InvalidParameter("need at least one variable and degree >= 1".into()));
    }
    Ok(())
}

/// Left side of the main identity in `n` x-variables and `m` y-variables.
pub fn main_lhs(n: usize, m: usize, d: u32) -> MultiSeries {
    let ring = ring_xy(n, m, d);
    let px = p_table(&ring.layout(0), d as usize);
    let py = p_table(&ring.layout(1), d as usize);
    pair_sum(&ring, &px, &py, pid_exponent)
}

/// Right side of the main identity as a product expansion.
pub fn main_rhs(n: usize, m: usize, d: u32) -> Result<MultiSeries> {
    let ring = ring_xy(n, m, d);
    let s = geometric_all(&ring.one(), &ring, 0)?;
    let s = geometric_all(&s, &ring, 1)?;
    pid_kernel(&s, &ring, 0, 1, &[])
}

pub fn verify_main(n: usize, m: usize, d: u32, seed: u64) -> Result<VerifyReport> {
    check_dims(n, d)?;
    let ring = ring_xy(n, m, d);
    let mut c = Checker::new("pid.main", seed).param("n", n).param("m", m).param("D", d);
    c.plan(degree_plan(d, "the q-exponent n(λ)+n(μ)-<λ',μ'> is at least -|λ||μ|"));
    c.series(&main_lhs(n, m, d), &main_rhs(n, m, d)?, &ring.names);
    Ok(c.finish())
}

/// `Σ_{λ,μ} q^{…} P_{λ/ν}(x) P_μ(y)` against its one-sided expansion.
pub fn verify_cor1(nu: &Partition, n: usize, m: usize, d: u32, seed: u64) -> Result<VerifyReport> {
    check_dims(n, d)?;
    let ring = ring_xy(n, m, d);
    let mut c = Checker::new("pid.cor1", seed).param("nu", nu).param("n", n).param("m", m).param("D", d);
    c.plan(degree_plan(d, "P_{λ/ν} vanishes unless ν ⊂ λ, so λ runs over the skew table only"));
    let px = skew_tables(&ring, 0, Family::P, nu, d);
    let py = p_table(&ring.layout(1), d as usize);
    let lhs = pair_sum(&ring, &px, &py, pid_exponent);

    let mut sum = ring.zero();
    for (lambda, p) in &py {
        sum.add_assign(&p.scale(&LaurentQ::q_pow(pid_exponent(lambda, nu))));
    }
    let rhs = pid_kernel(&geometric_all(&sum, &ring, 0)?, &ring, 0, 1, &[])?;
    c.series(&lhs, &rhs, &ring.names);
    Ok(c.finish())
}

/// `Q_{η/μ}(x/q)` for every `μ ⊂ η`, keyed by `μ`.
fn skew_q_down(ring: &VarRing, g: usize, eta: &Partition) -> BTreeMap<Partition, MultiSeries> {
    let shifts: Vec<i64> = (0..ring.nvars()).map(|v| if ring.group(g).contains(&v) { -1 } else { 0 }).collect();
    let mut out = BTreeMap::new();
    for mu in subpartitions(eta) {
        let t = skew_table(Family::Q, &mu, &ring.layout(g), eta.weight() - mu.weight());
        if let Some(s) = t.get(eta) {
            out.insert(mu, s.scale_vars_by_q(&shifts));
        }
    }
    out
}

/// Skew in both alphabets: `Σ q^{…} P_{λ/ν}(x) P_{μ/η}(y)`.
pub fn verify_cor2(nu: &Partition, eta: &Partition, n: usize, m: usize, d: u32, seed: u64) -> Result<VerifyReport> {
    check_dims(n, d)?;
    let ring = ring_xy(n, m, d);
    let mut c =
        Checker::new("pid.cor2", seed).param("nu", nu).param("eta", eta).param("n", n).param("m", m).param("D", d);
    c.plan(degree_plan(d, "Q_{η/μ} vanishes unless μ ⊂ η, so μ runs over the subpartitions of η"));
    let px = skew_tables(&ring, 0, Family::P, nu, d);
    let py = skew_tables(&ring, 1, Family::P, eta, d);
    let lhs = pair_sum(&ring, &px, &py, pid_exponent);

    let mut sum = ring.zero();
    for (mu, qx) in skew_q_down(&ring, 0, eta) {
        for (lambda, py) in skew_tables(&ring, 1, Family::P, &mu, d) {
            let t = qx.mul(&py).scale(&LaurentQ::q_pow(pid_exponent(&lambda, nu)));
            sum.add_assign(&t);
        }
    }
    let rhs = pid_kernel(&geometric_all(&sum, &ring, 0)?, &ring, 0, 1, &[])?;
    c.series(&lhs, &rhs, &ring.names);
    Ok(c.finish())
}

/// The one-alphabet case of the doubly skew identity.
pub fn verify_genx(lambda: &Partition, mu: &Partition, n: usize, d: u32, seed: u64) -> Result<VerifyReport> {
    check_dims(n, d)?;
    let ring = VarRing::new(&[("x", n)], DegreeBound::total(d));
    let mut c = Checker::new("pid.genx", seed).param("lambda", lambda).param("mu", mu).param("n", n).param("D", d);
    c.plan(degree_plan(d, "the right side only involves ν ⊂ λ"));
    let mut lhs = ring.zero();
    for (nu, p) in skew_tables(&ring, 0, Family::P, mu, d) {
        lhs.add_assign(&p.scale(&LaurentQ::q_pow(pid_exponent(lambda, &nu))));
    }
    let mut sum = ring.zero();
    for (nu, qx) in skew_q_down(&ring, 0, lambda) {
        sum.add_assign(&qx.scale(&LaurentQ::q_pow(pid_exponent(mu, &nu))));
    }
    let rhs = geometric_all(&sum, &ring, 0)?;
    c.series(&lhs, &rhs, &ring.names);
    Ok(c.finish())
}

/// `Σ_λ q^{n(λ) - Σ_{l≤j} λ'_l} P_λ(x)` against the linear correction times
/// `∏ 1/(1-x_i)`.
pub fn verify_cor3(j: usize, n: usize, d: u32, seed: u64) -> Result<VerifyReport> {
    check_dims(n, d)?;
    let ring = VarRing::new(&[("x", n)], DegreeBound::total(d));
    let mut c = Checker::new("pid.cor3", seed).param("j", j).param("n", n).param("D", d);
    c.plan(degree_plan(d, "the exponent is at least -j·|λ|"));
    let mut lhs = ring.zero();
    for (lambda, p) in p_table(&ring.layout(0), d as usize) {
        let conj = lambda.conjugate();
        let e = lambda.n_stat() as i64 - (1..=j).map(|l| conj.part(l) as i64).sum::<i64>();
        lhs.add_assign(&p.scale(&LaurentQ::q_pow(e)));
    }
    let mut corr = ring.one();
    for k in 1..=j.min(d as usize) {
        let row = hl_p(&Partition::row(k), n, Some(d)).value;
        corr.add_assign(&row.scale(&(&LaurentQ::one_minus(1, 1) * &LaurentQ::q_pow(-(k as i64)))));
    }
    let rhs = geometric_all(&corr, &ring, 0)?;
    c.series(&lhs, &rhs, &ring.names);
    Ok(c.finish())
}

/// `Σ_λ P_λ(x) Q_λ(y) = ∏ (1 - q x_i y_j)/(1 - x_i y_j)`.
pub fn verify_cauchy(n: usize, m: usize, d: u32, seed: u64) -> Result<VerifyReport> {
    check_dims(n, d)?;
    let ring = ring_xy(n, m, d);
    let mut c = Checker::new("hl.cauchy", seed).param("n", n).param("m", m).param("D", d);
    c.plan(degree_plan(d, "all coefficients are polynomials in q"));
    let px = p_table(&ring.layout(0), d as usize);
    let qy = skew_table(Family::Q, &Partition::empty(), &ring.layout(1), d as usize);
    let mut lhs = ring.zero();
    for (lambda, p) in &px {
        if let Some(q) = qy.get(lambda) {
            lhs.add_assign(&p.mul(q));
        }
    }
    let mut rhs = ring.one();
    for &x in ring.group(0) {
        for &y in ring.group(1) {
            rhs = ratio_factor(&rhs, &ring.mono(&[x, y]), &LaurentQ::q_pow(1), &LaurentQ::one())?;
        }
    }
    c.series(&lhs, &rhs, &ring.names);
    Ok(c.finish())
}

/// `Σ_λ P_{λ/μ}(x) Q_{λ/ν}(y) = Σ_λ P_{ν/λ}(x) Q_{μ/λ}(y) ∏ (1 - q x_i y_j)/(1 - x_i y_j)`.
pub fn verify_skew_cauchy(
    mu: &Partition,
    nu: &Partition,
    n: usize,
    m: usize,
    d: u32,
    seed: u64,
) -> Result<VerifyReport> {
    check_dims(n, d)?;
    let ring = ring_xy(n, m, d);
    let mut c =
        Checker::new("hl.skew_cauchy", seed).param("mu", mu).param("nu", nu).param("n", n).param("m", m).param("D", d);
    c.plan(degree_plan(d, "all coefficients are polynomials in q"));
    let px = skew_tables(&ring, 0, Family::P, mu, d);
    let qy = skew_tables(&ring, 1, Family::Q, nu, d);
    let mut lhs = ring.zero();
    for (lambda, p) in &px {
        if let Some(q) = qy.get(lambda) {
            lhs.add_assign(&p.mul(q));
        }
    }
    let mut sum = ring.zero();
    for lambda in subpartitions(mu) {
        if !nu.contains(&lambda) {
            continue;
        }
        let p = skew_tables(&ring, 0, Family::P, &lambda, d).remove(nu);
        let q = skew_tables(&ring, 1, Family::Q, &lambda, d).remove(mu);
        if let (Some(p), Some(q)) = (p, q) {
            sum.add_assign(&p.mul(&q));
        }
    }
    let mut rhs = sum;
    for &x in ring.group(0) {
        for &y in ring.group(1) {
            rhs = ratio_factor(&rhs, &ring.mono(&[x, y]), &LaurentQ::q_pow(1), &LaurentQ::one())?;
        }
    }
    c.series(&lhs, &rhs, &ring.names);
    Ok(c.finish())
}

/// `Σ_λ q^{n(λ)} P_{λ/μ}(x) = q^{n(μ)} ∏ 1/(1-x_i)`.
pub fn verify_sqspec(mu: &Partition, n: usize, d: u32, seed: u64) -> Result<VerifyReport> {
    check_dims(n, d)?;
    let ring = VarRing::new(&[("x", n)], DegreeBound::total(d));
    let mut c = Checker::new("hl.sqspec", seed).param("mu", mu).param("n", n).param("D", d);
    c.plan(degree_plan(d, "all coefficients are polynomials in q"));
    let mut lhs = ring.zero();
    for (lambda, p) in skew_tables(&ring, 0, Family::P, mu, d) {
        lhs.add_assign(&p.scale(&LaurentQ::q_pow(lambda.n_stat() as i64)));
    }
    let rhs = geometric_all(&ring.constant(LaurentQ::q_pow(mu.n_stat() as i64)), &ring, 0)?;
    c.series(&lhs, &rhs, &ring.names);
    Ok(c.finish())
}

/// Raw evaluator for the chained sum
/// `Σ ∏_i q^{n(λ⁽ⁱ⁾) - ⟨λ⁽ⁱ⁾', λ⁽ⁱ⁺¹⁾'⟩} P_{λ⁽ⁱ⁾}(x⁽ⁱ⁾)` with `λ⁽ʳ⁺¹⁾ = 0`,
/// `vars` variables per alphabet, truncated at total degree `d`.
pub fn chained_sum(rank: usize, vars: usize, d: u32) -> MultiSeries {
    let groups: Vec<(String, usize)> = (1..=rank).map(|i| (format!("x{i}_"), vars)).collect();
    let layout: Vec<(&str, usize)> = groups.iter().map(|(s, k)| (s.as_str(), *k)).collect();
    let ring = VarRing::new(&layout, DegreeBound::total(d));
    let tables: Vec<BTreeMap<Partition, MultiSeries>> =
        (0..rank).map(|g| p_table(&ring.layout(g), d as usize)).collect();
    // fold from the last alphabet: acc[λ] = Σ over the tail given λ⁽ⁱ⁾ = λ
    let mut acc: BTreeMap<Partition, MultiSeries> = BTreeMap::new();
    acc.insert(Partition::empty(), ring.one());
    for table in tables.iter().rev() {
        let mut next = BTreeMap::new();
        for (lambda, p) in table {
            let mut s = ring.zero();
            for (nu, tail) in &acc {
                let e = lambda.n_stat() as i64 - lambda.conjugate().dot(&nu.conjugate()) as i64;
                s.add_assign(&p.mul(tail).scale(&LaurentQ::q_pow(e)));
            }
            if !s.is_empty() {
                next.insert(lambda.clone(), s);
            }
        }
        acc = next;
    }
    acc.values().fold(ring.zero(), |a, s| a.add(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn main_small() {
        assert!(verify_main(1, 1, 3, 0).unwrap().passed());
        assert!(verify_main(2, 1, 3, 0).unwrap().passed());
    }

    #[test]
    fn main_without_y_is_the_single_alphabet_sum() {
        let lhs = main_lhs(2, 0, 4);
        let ring = VarRing::new(&[("x", 2)], DegreeBound::total(4));
        let rhs = geometric_all(&ring.one(), &ring, 0).unwrap();
        assert_eq!(lhs, rhs);
        assert!(verify_main(2, 0, 4, 0).unwrap().passed());
    }

    #[test]
    fn constant_term() {
        let l = main_lhs(2, 2, 2);
        assert!(l.coeff(&[0, 0, 0, 0]).is_one());
    }

    #[test]
    fn skew_cases() {
        assert!(verify_cor1(&p("1"), 1, 1, 3, 0).unwrap().passed());
        assert!(verify_cor2(&p("1"), &p("1"), 1, 1, 3, 0).unwrap().passed());
        assert!(verify_genx(&p("2,1"), &p("1"), 1, 3, 0).unwrap().passed());
        assert!(verify_cor3(1, 2, 4, 0).unwrap().passed());
        assert!(verify_cor3(0, 2, 4, 0).unwrap().passed());
    }

    #[test]
    fn cor1_with_empty_nu_matches_main() {
        let a = verify_cor1(&Partition::empty(), 1, 1, 3, 0).unwrap();
        assert!(a.passed());
        let ring = ring_xy(1, 1, 3);
        let px = skew_tables(&ring, 0, Family::P, &Partition::empty(), 3);
        let py = p_table(&ring.layout(1), 3);
        assert_eq!(pair_sum(&ring, &px, &py, pid_exponent), main_lhs(1, 1, 3));
    }

    #[test]
    fn cauchy_family() {
        assert!(verify_cauchy(2, 1, 4, 0).unwrap().passed());
        assert!(verify_skew_cauchy(&p("1"), &p("1"), 1, 1, 4, 0).unwrap().passed());
        assert!(verify_sqspec(&p("2,1"), 2, 4, 0).unwrap().passed());
    }

    #[test]
    fn chained_sum_rank_two_is_main() {
        assert_eq!(chained_sum(2, 1, 3).terms().len(), main_lhs(1, 1, 3).terms().len());
        assert_eq!(chained_sum(2, 1, 3), main_lhs(1, 1, 3));
    }
}
