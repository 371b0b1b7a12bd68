//! Root-system sums with Cartan-form exponents: the bounded two-parameter
//! sum and its product form, the unbounded rank-r sum, and the invariance
//! of the bounded sums under peeling off first columns.

use std::collections::BTreeMap;

use crate::error::{HlqError, Result};
use crate::identities::report::{Checker, TruncationPlan, VerifyReport};
use crate::identities::ring::VarRing;
use crate::parallel;
use crate::partition::{enumerate_partitions, Partition};
use crate::qalgebra::{DegreeBound, InverseQpochTable, LaurentQ, MultiSeries};

/// `½ Σ_{i,j} C_{ij} ⟨v_i, v_j⟩` for the type-A Cartan matrix, on integer
/// vectors (conjugate partitions or plain counts).
pub fn cartan_form(dots: impl Fn(usize, usize) -> i64, rank: usize) -> i64 {
    let diag: i64 = (0..rank).map(|i| dots(i, i)).sum();
    let off: i64 = (0..rank.saturating_sub(1)).map(|i| dots(i, i + 1)).sum();
    diag - off
}

fn partition_form(parts: &[Partition]) -> i64 {
    let conj: Vec<Partition> = parts.iter().map(Partition::conjugate).collect();
    cartan_form(|i, j| conj[i].dot(&conj[j]) as i64, parts.len())
}

/// `1/b_λ(q)` through the table's cap.
pub(crate) fn inv_b(lambda: &Partition, t: &InverseQpochTable) -> LaurentQ {
    lambda
        .multiplicities()
        .iter()
        .filter(|&&m| m > 0)
        .fold(LaurentQ::one(), |acc, &m| acc.mul_trunc(&t.get(m as i64), t.cap()))
}

/// All tuples `(λ⁽¹⁾, …, λ⁽ʳ⁾)` with `λ⁽ⁱ⁾ ⊢ w_i` and `ℓ(λ⁽ⁱ⁾) ≤ len_i`.
fn tuples(weights: &[usize], lens: &[Option<usize>]) -> Vec<Vec<Partition>> {
    let mut out = vec![Vec::new()];
    for (&w, &len) in weights.iter().zip(lens) {
        let opts = enumerate_partitions(w, len, None);
        out = out
            .into_iter()
            .flat_map(|t| {
                opts.iter().map(move |p| {
                    let mut t = t.clone();
                    t.push(p.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// Every exponent vector `w` with `w_i ≤ degs_i`.
fn weight_vectors(degs: &[u32]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &d in degs {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                (0..=d as usize).map(move |k| {
                    let mut v = v.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

/// `R_M(a;q)`: the sum over tuples with `ℓ(λ⁽ⁱ⁾) ≤ M_i` of
/// `q^{½ΣC⟨λ⁽ⁱ⁾',λ⁽ʲ⁾'⟩} ∏ a_i^{|λ⁽ⁱ⁾|} / ∏ (q;q)_{M_i-ℓ} b_{λ⁽ⁱ⁾}`; with
/// `bounds = None` the unbounded sum. Coefficients of `a^w` for `w_i ≤ degs_i`,
/// through `q^cap`.
pub fn cartan_sum(bounds: Option<&[usize]>, degs: &[u32], cap: i64) -> BTreeMap<Vec<usize>, LaurentQ> {
    let rank = degs.len();
    let maxw = degs.iter().copied().max().unwrap_or(0) as usize;
    let t = InverseQpochTable::new(maxw.max(bounds.map_or(0, |b| b.iter().copied().max().unwrap_or(0))), cap);
    let lens: Vec<Option<usize>> = (0..rank).map(|i| bounds.map(|b| b[i])).collect();
    let ws = weight_vectors(degs);
    let coeffs = parallel::map(&ws, |w| {
        let mut acc = LaurentQ::zero();
        for tuple in tuples(w, &lens) {
            let e = partition_form(&tuple);
            if e > cap {
                continue;
            }
            let mut term = LaurentQ::q_pow(e);
            for (i, lambda) in tuple.iter().enumerate() {
                term = term.mul_trunc(&inv_b(lambda, &t), cap);
                if let Some(b) = bounds {
                    term = term.mul_trunc(&t.get(b[i] as i64 - lambda.len() as i64), cap);
                }
            }
            acc += &term;
        }
        acc
    });
    ws.into_iter().zip(coeffs).collect()
}

fn as_series(ring: &VarRing, coeffs: &BTreeMap<Vec<usize>, LaurentQ>) -> MultiSeries {
    let mut s = ring.zero();
    for (w, c) in coeffs {
        s.add_term(w.iter().map(|&k| k as u32).collect(), c.clone());
    }
    s
}

pub(crate) fn check_series(c: &mut Checker, ring: &VarRing, lhs: &MultiSeries, rhs: &MultiSeries, cap: i64) {
    let mut keys: Vec<&Vec<u32>> = lhs.terms().keys().chain(rhs.terms().keys()).collect();
    keys.sort();
    keys.dedup();
    for m in keys {
        let label = crate::identities::report::monomial_name(m, &ring.names);
        c.qseries(&label, &lhs.coeff(m), &rhs.coeff(m), cap);
    }
}

fn series_plan(degs: &[u32], cap: i64) -> TruncationPlan {
    TruncationPlan {
        x_degree: None,
        q_min: Some(0),
        q_max: Some(cap),
        max_weights: degs.iter().map(|&d| d as usize).collect(),
        derivation: "the Cartan form is positive definite, so every summand is a power series in q \
                     with nonnegative exponents and truncating each factor at the cap leaves the \
                     compared coefficients exact"
            .into(),
    }
}

/// Coefficient of `a^i b^j` on the left of the bounded two-parameter sum,
/// written with the pair form `⟨λ',λ'⟩ + ⟨μ',μ'⟩ - ⟨λ',μ'⟩`.
pub fn pps_lhs(n: usize, m: usize, i: usize, j: usize, t: &InverseQpochTable) -> LaurentQ {
    let cap = t.cap();
    let mut acc = LaurentQ::zero();
    for lambda in enumerate_partitions(i, Some(n), None) {
        let lc = lambda.conjugate();
        let left = t.get((n - lambda.len()) as i64).mul_trunc(&inv_b(&lambda, t), cap);
        for mu in enumerate_partitions(j, Some(m), None) {
            let mc = mu.conjugate();
            let e = (lc.dot(&lc) + mc.dot(&mc)) as i64 - lc.dot(&mc) as i64;
            if e > cap {
                continue;
            }
            let right = t.get((m - mu.len()) as i64).mul_trunc(&inv_b(&mu, t), cap);
            acc += &left.mul_trunc(&right, cap).shift(e).truncate(cap);
        }
    }
    acc
}

/// `(abq;q)_{n+m} / ((q,aq,abq;q)_n (q,bq,abq;q)_m)` expanded in `a`, `b`.
pub fn pps_rhs(n: usize, m: usize, deg_a: u32, deg_b: u32, cap: i64) -> Result<MultiSeries> {
    let ring = VarRing::new(&[("a", 1), ("b", 1)], DegreeBound::per_var(vec![deg_a, deg_b])).with_qcap(cap);
    let t = InverseQpochTable::new(n.max(m), cap);
    let (a, b, ab) = (ring.mono(&[0]), ring.mono(&[1]), ring.mono(&[0, 1]));
    let mut s = ring.constant(t.get(n as i64).mul_trunc(&t.get(m as i64), cap));
    for k in 1..=(n + m) as i64 {
        s = s.mul_one_minus(&ab, &LaurentQ::q_pow(k));
    }
    for k in 1..=n as i64 {
        s = s.div_one_minus(&a, &LaurentQ::q_pow(k))?;
        s = s.div_one_minus(&ab, &LaurentQ::q_pow(k))?;
    }
    for k in 1..=m as i64 {
        s = s.div_one_minus(&b, &LaurentQ::q_pow(k))?;
        s = s.div_one_minus(&ab, &LaurentQ::q_pow(k))?;
    }
    Ok(s)
}

pub fn verify_cor4(n: usize, m: usize, deg_a: u32, deg_b: u32, cap: i64, seed: u64) -> Result<VerifyReport> {
    let ring = VarRing::new(&[("a", 1), ("b", 1)], DegreeBound::per_var(vec![deg_a, deg_b]));
    let mut c = Checker::new("cor4.pps", seed)
        .param("n", n)
        .param("m", m)
        .param("deg_a", deg_a)
        .param("deg_b", deg_b)
        .param("N", cap);
    c.plan(series_plan(&[deg_a, deg_b], cap));
    let t = InverseQpochTable::new((deg_a.max(deg_b) as usize).max(n).max(m), cap);
    let mut lhs = ring.zero();
    for i in 0..=deg_a as usize {
        for j in 0..=deg_b as usize {
            lhs.add_term(vec![i as u32, j as u32], pps_lhs(n, m, i, j, &t));
        }
    }
    let rhs = pps_rhs(n, m, deg_a, deg_b, cap)?;
    check_series(&mut c, &ring, &lhs, &rhs, cap);
    Ok(c.finish())
}

fn rank_names(rank: usize) -> Vec<(String, usize)> {
    (1..=rank).map(|i| (format!("a{i}"), 1)).collect()
}

fn rank_ring(rank: usize, degs: &[u32], cap: i64) -> VarRing {
    let names = rank_names(rank);
    let layout: Vec<(&str, usize)> = names.iter().map(|(s, k)| (s.as_str(), *k)).collect();
    let mut ring = VarRing::new(&layout, DegreeBound::per_var(degs.to_vec())).with_qcap(cap);
    ring.names = (1..=rank).map(|i| format!("a{i}")).collect();
    ring
}

/// `∏_{α>0} 1/(a^α q;q)_∞` for type `A_rank`.
pub fn positive_root_product(ring: &VarRing, rank: usize, cap: i64) -> Result<MultiSeries> {
    let mut s = ring.one();
    for i in 0..rank {
        for j in i..rank {
            let vars: Vec<usize> = (i..=j).collect();
            let mono = ring.mono(&vars);
            for k in 1..=cap {
                s = s.div_one_minus(&mono, &LaurentQ::q_pow(k))?;
            }
        }
    }
    Ok(s)
}

pub fn verify_hua(rank: usize, degs: &[u32], cap: i64, seed: u64) -> Result<VerifyReport> {
    if rank == 0 || degs.len() != rank {
        return Err(HlqError::InvalidParameter("need one degree per root-system rank".into()));
    }
    let ring = rank_ring(rank, degs, cap);
    let mut c = Checker::new("hua", seed).param("rank", rank).param("degrees", degs).param("N", cap);
    c.plan(series_plan(degs, cap));
    let lhs = as_series(&ring, &cartan_sum(None, degs, cap));
    let rhs = positive_root_product(&ring, rank, cap)?;
    check_series(&mut c, &ring, &lhs, &rhs, cap);
    if rank == 2 {
        // all a_i = 1: the sum over every pair against 1/(q;q)_∞³
        let (l, r) = hua_a2_at_one(cap);
        c.qseries("a=1", &l, &r, cap);
    }
    Ok(c.finish())
}

/// Partitions with `Σ λ_i² ≤ max_sq`, optionally with at most `max_len` parts.
pub fn partitions_by_norm(max_sq: usize, max_len: Option<usize>) -> Vec<Partition> {
    fn rec(rem: usize, max_part: usize, len_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).expect("decreasing"));
        if len_left == 0 {
            return;
        }
        for p in (1..=max_part).rev() {
            if p * p <= rem {
                cur.push(p);
                rec(rem - p * p, p, len_left - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    let top = (max_sq as f64).sqrt() as usize + 1;
    rec(max_sq, top, max_len.unwrap_or(usize::MAX), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Rank-two sum at `a_1 = a_2 = 1` and `1/(q;q)_∞³`, both through `q^cap`.
/// The pair form is at least half of `⟨λ',λ'⟩ + ⟨μ',μ'⟩`, which bounds the
/// enumeration.
pub fn hua_a2_at_one(cap: i64) -> (LaurentQ, LaurentQ) {
    let t = InverseQpochTable::new(2 * cap as usize + 1, cap);
    let conj: Vec<Partition> = partitions_by_norm(2 * cap as usize, None);
    let items: Vec<&Partition> = conj.iter().collect();
    let lhs = parallel::map_sum(
        &items,
        LaurentQ::zero(),
        |lc| {
            let mut acc = LaurentQ::zero();
            let l = lc.conjugate();
            let il = inv_b(&l, &t);
            for mc in &conj {
                let e = (lc.dot(lc) + mc.dot(mc)) as i64 - lc.dot(mc) as i64;
                if e > cap {
                    continue;
                }
                let term = il.mul_trunc(&inv_b(&mc.conjugate(), &t), cap).shift(e).truncate(cap);
                acc += &term;
            }
            acc
        },
        |a, b| &a + &b,
    );
    let inv = t.get(cap);
    let rhs = inv.mul_trunc(&inv, cap).mul_trunc(&inv, cap);
    (lhs, rhs)
}

/// `Σ_{r ≤ M} q^{½ΣC r r} a^r / ∏ (q;q)_{M_i - r_i} · R_r = R_M`.
pub fn verify_lemma_inv(bounds: [usize; 2], deg_a: u32, deg_b: u32, cap: i64, seed: u64) -> Result<VerifyReport> {
    let degs = [deg_a, deg_b];
    let ring = rank_ring(2, &degs, cap);
    let mut c =
        Checker::new("lemma.inv", seed).param("M", bounds).param("deg_a", deg_a).param("deg_b", deg_b).param("N", cap);
    c.plan(series_plan(&degs, cap));
    let t = InverseQpochTable::new(bounds[0].max(bounds[1]), cap);
    let mut lhs = ring.zero();
    for r1 in 0..=bounds[0] {
        for r2 in 0..=bounds[1] {
            let e = (r1 * r1 + r2 * r2) as i64 - (r1 * r2) as i64;
            if e > cap {
                continue;
            }
            let pref =
                t.get((bounds[0] - r1) as i64).mul_trunc(&t.get((bounds[1] - r2) as i64), cap).shift(e).truncate(cap);
            let r = as_series(&ring, &cartan_sum(Some(&[r1, r2]), &degs, cap));
            lhs.add_assign(&r.mul_monomial(&[r1 as u32, r2 as u32], &pref));
        }
    }
    let rhs = as_series(&ring, &cartan_sum(Some(&bounds), &degs, cap));
    check_series(&mut c, &ring, &lhs, &rhs, cap);
    Ok(c.finish())
}
