//! Bounded and deformed relatives of the single-alphabet sum: the `(q,t)`
//! strip sum, chained sums with principally specialized inner alphabets,
//! the `λ_1 ≤ k` sums and their finite-`n` and `n → ∞` specializations.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{HlqError, Result};
use crate::hallittlewood::macdonald::t_pow;
use crate::hallittlewood::{eval_p_all, hl_p, macdonald_cprime, macdonald_psi, p_table, BiPoly, BiRational};
use crate::identities::bounded::{check_series, inv_b};
use crate::identities::pid::main_lhs;
use crate::identities::report::{Checker, Status, TruncationPlan, VerifyReport};
use crate::identities::ring::{geometric_all, pid_kernel, VarRing};
use crate::partition::{partitions_up_to, strips_over, Partition};
use crate::qalgebra::eval::{rpow, DEFAULT_POINTS};
use crate::qalgebra::pochhammer::{eta_quotient, infinite_product, ProductFactor};
use crate::qalgebra::{qbinom, DegreeBound, InverseQpochTable, LaurentQ, MultiSeries, PointSampler};

fn div(a: &BigRational, b: &BigRational) -> Result<BigRational> {
    if b.is_zero() {
        return Err(HlqError::ZeroDenominator);
    }
    Ok(a / b)
}

fn choose2(m: i64) -> i64 {
    m * (m - 1) / 2
}

// ---------------------------------------------------------------------------
// (q,t) strip sum

/// Which form of the `(q,t)` single-alphabet sum is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeformedReduction {
    /// `q = 0`: the Hall–Littlewood sum in the parameter `t`.
    QZero,
    /// The full two-parameter statement, which needs Macdonald polynomials.
    Full,
}

/// `Σ t^{n(λ)} P_λ(x;q,t)/c'_λ = ∏ 1/(x_i;q)_∞`, checked at `q = 0`, where
/// `c'_λ(0,t) = 1` and the sum becomes `Σ t^{n(λ)} P_λ(x;t) = ∏ 1/(1-x_i)`.
pub fn verify_deformed_sum(n: usize, d: u32, reduction: DeformedReduction, seed: u64) -> Result<VerifyReport> {
    let mut c = Checker::new("s6.npsom2", seed).param("n", n).param("D", d).param("reduction", reduction);
    if reduction == DeformedReduction::Full {
        c.force(Status::Inconclusive, "the two-parameter form needs Macdonald P_λ(x;q,t), which is not computed");
        return Ok(c.finish());
    }
    if n == 0 || d == 0 {
        return Err(HlqError::InvalidParameter("need at least one variable and degree >= 1".into()));
    }
    c.plan(TruncationPlan {
        x_degree: Some(d),
        q_min: Some(0),
        q_max: None,
        max_weights: vec![d as usize],
        derivation: "homogeneity: monomials of degree <= D only see |λ| <= D".into(),
    });
    for lambda in partitions_up_to(d as usize, None, None) {
        let at0 = macdonald_cprime(&lambda).at_q_zero();
        c.laurent(&format!("c'_{lambda}(0,t)"), &at0, &LaurentQ::one());
    }
    let ring = VarRing::new(&[("x", n)], DegreeBound::total(d));
    let rhs = geometric_all(&ring.one(), &ring, 0)?;
    c.series(&main_lhs(n, 0, d), &rhs, &ring.names);
    Ok(c.finish())
}

/// The `z^j` summands `(ν, ψ_{ν/μ})` of the `(q,t)` strip sum.
fn deformed_strip_terms(mu: &Partition, j: usize) -> Result<Vec<(Partition, BiRational)>> {
    strips_over(mu, j, None).into_iter().map(|nu| Ok((nu.clone(), macdonald_psi(&nu, mu)?))).collect()
}

fn deformed_rhs_den(mu: &Partition, j: usize) -> BiPoly {
    let mut den = macdonald_cprime(mu);
    for i in 1..=j as u32 {
        den = &den * &BiPoly::one_minus(i, 0);
    }
    den
}

/// Left and right sides of the `z^j` coefficient of the `(q,t)` strip sum
/// as bivariate rational functions.
pub fn deformed_strip_sides(mu: &Partition, j: usize) -> Result<(BiRational, BiRational)> {
    let mut lhs = BiRational::from_poly(BiPoly::zero());
    for (nu, psi) in deformed_strip_terms(mu, j)? {
        let w = BiRational::new(t_pow(nu.n_stat() as u32), macdonald_cprime(&nu))?;
        lhs = &lhs + &(&w * &psi);
    }
    let rhs = BiRational::new(t_pow(mu.n_stat() as u32), deformed_rhs_den(mu, j))?;
    Ok((lhs, rhs))
}

/// Coefficient of `z^j` in `Σ_{ν⊃μ} t^{n(ν)} z^{|ν-μ|} ψ_{ν/μ}(q,t)/c'_ν
/// = t^{n(μ)}/((z;q)_∞ c'_μ)`, summed termwise at random rational `(q, t)`
/// and, when `symbolic` is set, also as bivariate rational functions.
pub fn verify_deformed_strips(
    mu: &Partition,
    dz: usize,
    points: usize,
    symbolic: bool,
    seed: u64,
) -> Result<VerifyReport> {
    let mut c = Checker::new("s6.psiqt", seed).param("mu", mu).param("Dz", dz);
    c.bound("points", points);
    c.bound("symbolic", symbolic);
    let terms: Vec<Vec<(Partition, BiRational)>> =
        (0..=dz).map(|j| deformed_strip_terms(mu, j)).collect::<Result<_>>()?;
    let vals = PointSampler::new(seed).evaluate(points, &["q", "t"], &["q", "t"], |pt| {
        let (q, t) = (pt.get("q"), pt.get("t"));
        let mut out = Vec::with_capacity(terms.len());
        for (j, per_j) in terms.iter().enumerate() {
            let mut lhs = BigRational::zero();
            for (nu, psi) in per_j {
                lhs += div(&(rpow(t, nu.n_stat() as i64)? * psi.eval(q, t)?), &macdonald_cprime(nu).eval(q, t))?;
            }
            let rhs = div(&rpow(t, mu.n_stat() as i64)?, &deformed_rhs_den(mu, j).eval(q, t))?;
            out.push((lhs, rhs));
        }
        Ok(out)
    })?;
    for (pt, per_j) in &vals {
        for (j, (l, r)) in per_j.iter().enumerate() {
            c.point(pt, &format!("z^{j}"), l, r);
        }
    }
    if symbolic {
        for j in 0..=dz {
            let (l, r) = deformed_strip_sides(mu, j)?;
            c.exact(&format!("z^{j} as rational functions"), &l.equals(&r), &true);
        }
    }
    Ok(c.finish())
}

// ---------------------------------------------------------------------------
// chained sums with principally specialized alphabets

/// `P_λ(a q, a q², …) = a^{|λ|} q^{|λ|+n(λ)} / b_λ(q)` for every `|λ| ≤ d`,
/// as series in the ring variable `var`.
fn specialized_table(ring: &VarRing, var: usize, d: usize, cap: i64) -> BTreeMap<Partition, MultiSeries> {
    let t = InverseQpochTable::new(d, cap);
    partitions_up_to(d, None, None)
        .into_iter()
        .map(|lambda| {
            let w = lambda.weight();
            let coef = inv_b(&lambda, &t).shift((w + lambda.n_stat()) as i64).truncate(cap);
            let mut mono = vec![0; ring.nvars()];
            mono[var] = w as u32;
            let s = MultiSeries::monomial(ring.nvars(), ring.bound.clone(), Some(cap), mono, coef);
            (lambda, s)
        })
        .collect()
}

/// `Σ ∏_i q^{n(λ⁽ⁱ⁾) - ⟨λ⁽ⁱ⁾', λ⁽ⁱ⁺¹⁾'⟩} F_i[λ⁽ⁱ⁾]` with `λ⁽ʳ⁺¹⁾ = 0`, folded
/// from the last table.
fn chain_fold(ring: &VarRing, tables: &[BTreeMap<Partition, MultiSeries>]) -> MultiSeries {
    let mut acc: BTreeMap<Partition, MultiSeries> = BTreeMap::new();
    acc.insert(Partition::empty(), ring.one());
    for table in tables.iter().rev() {
        let mut next = BTreeMap::new();
        for (lambda, p) in table {
            let lc = lambda.conjugate();
            let mut s = ring.zero();
            for (nu, tail) in &acc {
                let e = lambda.n_stat() as i64 - lc.dot(&nu.conjugate()) as i64;
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

fn chain_plan(d: u32, cap: i64, work: i64) -> TruncationPlan {
    TruncationPlan {
        x_degree: Some(d),
        q_min: Some(-((d * d) as i64)),
        q_max: Some(cap),
        max_weights: vec![d as usize],
        derivation: format!(
            "every alphabet, specialized or not, carries its own series variable, so total degree <= {d} \
             bounds every partition weight; products are formed through q^{work} and the tracked cap \
             certifies the compared range"
        ),
    }
}

fn certify(c: &mut Checker, lhs: &MultiSeries, rhs: &MultiSeries, cap: i64) {
    let certified = lhs.qcap().into_iter().chain(rhs.qcap()).min();
    c.bound("certified_cap", certified);
    if certified.is_some_and(|k| k < cap) {
        c.force(Status::Inconclusive, "working precision did not certify the requested q-order");
    }
}

fn rank_ext_ring(rank: usize, d: u32, work: i64) -> VarRing {
    let mut ring = VarRing::new(&[("x", 2), ("y", 2), ("a", rank.saturating_sub(2))], DegreeBound::total(d));
    for (k, &v) in ring.groups[2].clone().iter().enumerate() {
        ring.names[v] = format!("a{}", k + 2);
    }
    ring.with_qcap(work)
}

/// Chained sum over `rank` alphabets with `x⁽¹⁾ = x`, `x⁽ʳᵃⁿᵏ⁾ = y` and
/// `x⁽ⁱ⁾_j = a_i q^j` in between.
pub fn rank_extension_lhs(rank: usize, d: u32, work: i64) -> MultiSeries {
    let ring = rank_ext_ring(rank, d, work);
    let mut tables = vec![p_table(&ring.layout(0), d as usize)];
    for &v in ring.group(2) {
        tables.push(specialized_table(&ring, v, d as usize, work));
    }
    tables.push(p_table(&ring.layout(1), d as usize));
    chain_fold(&ring, &tables)
}

/// `∏_{α∈Δ'} 1/(a^α q;q)_∞ · ∏_i ∏_{j<rank} 1/((1 - a_2⋯a_j x_i)(1 - a_{r-j+1}⋯a_{r-1} y_i))`
/// times the two-alphabet kernel with `A = a_2⋯a_{r-1}`.
pub fn rank_extension_rhs(rank: usize, d: u32, work: i64) -> Result<MultiSeries> {
    let ring = rank_ext_ring(rank, d, work);
    let a: Vec<usize> = ring.group(2).to_vec();
    // a[k] is a_{k+2}
    let mut s = ring.one();
    for i in 0..a.len() {
        for j in i..a.len() {
            let mono = ring.mono(&a[i..=j]);
            for k in 1..=work {
                s = s.div_one_minus(&mono, &LaurentQ::q_pow(k))?;
            }
        }
    }
    for j in 1..rank {
        // a_2⋯a_j and a_{rank-j+1}⋯a_{rank-1}
        let left: Vec<usize> = a[..j - 1].to_vec();
        let right: Vec<usize> = a[a.len() + 1 - j..].to_vec();
        for &x in ring.group(0) {
            let mut vars = left.clone();
            vars.push(x);
            s = s.div_one_minus(&ring.mono(&vars), &LaurentQ::one())?;
        }
        for &y in ring.group(1) {
            let mut vars = right.clone();
            vars.push(y);
            s = s.div_one_minus(&ring.mono(&vars), &LaurentQ::one())?;
        }
    }
    pid_kernel(&s, &ring, 0, 1, &a)
}

pub fn verify_rank_extension(rank: usize, d: u32, cap: i64, seed: u64) -> Result<VerifyReport> {
    if !(2..=6).contains(&rank) || d == 0 {
        return Err(HlqError::InvalidParameter("need rank in 2..=6 and degree >= 1".into()));
    }
    let work = cap + (d * d) as i64;
    let ring = rank_ext_ring(rank, d, work);
    let mut c = Checker::new("s6.an_ext", seed).param("rank", rank).param("D", d).param("N", cap);
    c.plan(chain_plan(d, cap, work));
    let lhs = rank_extension_lhs(rank, d, work);
    let rhs = rank_extension_rhs(rank, d, work)?;
    certify(&mut c, &lhs, &rhs, cap);
    check_series(&mut c, &ring, &lhs, &rhs, cap);
    Ok(c.finish())
}

fn a3_ring(d: u32, work: i64) -> VarRing {
    let mut ring = VarRing::new(&[("a", 1), ("x", 2), ("b", 1)], DegreeBound::total(d));
    ring.names = vec!["a".into(), "x1".into(), "x2".into(), "b".into()];
    ring.with_qcap(work)
}

/// `Σ q^{n(λ)+n(μ)+n(ν)-⟨λ',μ'⟩-⟨μ',ν'⟩} P_λ(aq,aq²,…) P_μ(x) P_ν(bq,bq²,…)`.
pub fn a3_lhs(d: u32, work: i64) -> MultiSeries {
    let ring = a3_ring(d, work);
    let tables = vec![
        specialized_table(&ring, 0, d as usize, work),
        p_table(&ring.layout(1), d as usize),
        specialized_table(&ring, 3, d as usize, work),
    ];
    chain_fold(&ring, &tables)
}

/// `1/(aq,bq;q)_∞ ∏_i (1-ab x_i²)/((1-x_i)(1-a x_i)(1-b x_i)(1-ab x_i))
/// ∏_{i<j} (1-ab x_i x_j)/(1-q^{-1} ab x_i x_j)`.
pub fn a3_rhs(d: u32, work: i64) -> Result<MultiSeries> {
    let ring = a3_ring(d, work);
    let (a, b) = (0, 3);
    let xs = ring.group(1).to_vec();
    let mut s = ring.one();
    for v in [a, b] {
        for k in 1..=work {
            s = s.div_one_minus(&ring.mono(&[v]), &LaurentQ::q_pow(k))?;
        }
    }
    for &x in &xs {
        s = s.mul_one_minus(&ring.mono(&[a, b, x, x]), &LaurentQ::one());
        for vars in [vec![x], vec![a, x], vec![b, x], vec![a, b, x]] {
            s = s.div_one_minus(&ring.mono(&vars), &LaurentQ::one())?;
        }
    }
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            let m = ring.mono(&[a, b, xs[i], xs[j]]);
            s = s.mul_one_minus(&m, &LaurentQ::one()).div_one_minus(&m, &LaurentQ::q_pow(-1))?;
        }
    }
    Ok(s)
}

pub fn verify_a3(d: u32, cap: i64, seed: u64) -> Result<VerifyReport> {
    if d == 0 {
        return Err(HlqError::InvalidParameter("degree must be >= 1".into()));
    }
    let work = cap + (d * d) as i64;
    let ring = a3_ring(d, work);
    let mut c = Checker::new("s6.a3", seed).param("D", d).param("N", cap);
    c.plan(chain_plan(d, cap, work));
    let lhs = a3_lhs(d, work);
    let rhs = a3_rhs(d, work)?;
    certify(&mut c, &lhs, &rhs, cap);
    check_series(&mut c, &ring, &lhs, &rhs, cap);
    Ok(c.finish())
}

// ---------------------------------------------------------------------------
// sums over λ_1 ≤ k at rational points

/// `∏ 1/(1-y_i^p) ∏_{i<j} (1-q y_i y_j)/(1-y_i y_j)`; `p = 2` gives the
/// even-row kernel, `p = 1` the all-row one.
fn row_kernel(y: &[BigRational], q: &BigRational, p: i64) -> Result<BigRational> {
    let one = BigRational::one();
    let mut v = one.clone();
    for yi in y {
        v = div(&v, &(&one - rpow(yi, p)?))?;
    }
    for i in 0..y.len() {
        for j in i + 1..y.len() {
            let yy = &y[i] * &y[j];
            v = div(&(v * (&one - q * &yy)), &(&one - &yy))?;
        }
    }
    Ok(v)
}

/// `Σ_ε K(x^ε) (∏_{ε_i=-1} x_i^{w})^k` over sign vectors.
fn signed_kernel_sum(x: &[BigRational], q: &BigRational, p: i64, w: i64, k: i64) -> Result<BigRational> {
    let n = x.len();
    let mut acc = BigRational::zero();
    for mask in 0..(1usize << n) {
        let mut y = Vec::with_capacity(n);
        let mut mono = BigRational::one();
        for (i, xi) in x.iter().enumerate() {
            if mask >> i & 1 == 1 {
                y.push(div(&BigRational::one(), xi)?);
                mono *= rpow(xi, w * k)?;
            } else {
                y.push(xi.clone());
            }
        }
        acc += row_kernel(&y, q, p)? * mono;
    }
    Ok(acc)
}

fn x_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Which bounded sum over `λ_1 ≤ k` at rational points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundedRows {
    /// `Σ P_{2λ}` against the even-row kernel, with monomial `x^{1-ε}`.
    Even,
    /// `Σ P_λ` against the all-row kernel, with monomial `x^{(1-ε)/2}`.
    All,
}

pub fn verify_bounded_rows(n: usize, kmax: usize, rows: BoundedRows, points: usize, seed: u64) -> Result<VerifyReport> {
    if n == 0 {
        return Err(HlqError::InvalidParameter("need at least one variable".into()));
    }
    let id = match rows {
        BoundedRows::Even => "s6.stem",
        BoundedRows::All => "s6.md",
    };
    let mut c = Checker::new(id, seed).param("n", n).param("kmax", kmax);
    c.bound("points", points);
    let names = x_names(n);
    let mut vars: Vec<&str> = names.iter().map(String::as_str).collect();
    vars.push("q");
    let vals = PointSampler::new(seed).evaluate(points, &vars, &["q"], |pt| {
        let x: Vec<BigRational> = names.iter().map(|s| pt.get(s).clone()).collect();
        let q = pt.get("q");
        let top = match rows {
            BoundedRows::Even => 2 * kmax,
            BoundedRows::All => kmax,
        };
        let table = eval_p_all(&x, q, top)?;
        (0..=kmax)
            .map(|k| {
                let lhs: BigRational = match rows {
                    BoundedRows::Even => table
                        .iter()
                        .filter(|(l, _)| l.first() <= 2 * k && l.parts().iter().all(|p| p % 2 == 0))
                        .map(|(_, v)| v.clone())
                        .sum(),
                    BoundedRows::All => table.iter().filter(|(l, _)| l.first() <= k).map(|(_, v)| v.clone()).sum(),
                };
                let rhs = match rows {
                    BoundedRows::Even => signed_kernel_sum(&x, q, 2, 2, k as i64)?,
                    BoundedRows::All => signed_kernel_sum(&x, q, 1, 1, k as i64)?,
                };
                Ok((lhs, rhs))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    for (pt, per_k) in &vals {
        for (k, (l, r)) in per_k.iter().enumerate() {
            c.point(pt, &format!("u^{k}"), l, r);
        }
    }
    Ok(c.finish())
}

/// Coefficient of `u^k` on the right of the subset-sum form at a point `x`.
pub fn subset_sum(x: &[BigRational], q: &BigRational, k: i64) -> Result<BigRational> {
    let n = x.len();
    let one = BigRational::one();
    let mut acc = BigRational::zero();
    for mask in 0..(1usize << n) {
        let inside: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let outside: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        let m = inside.len() as i64;
        let mut lead = rpow(q, choose2(m))?;
        for &i in &inside {
            lead *= &x[i];
        }
        let mut t = rpow(&lead, k)?;
        for &i in &inside {
            t = div(&t, &(&one - div(&rpow(q, 1 - m)?, &x[i])?))?;
        }
        for &j in &outside {
            t = div(&t, &(&one - &x[j] * rpow(q, m)?))?;
        }
        for &i in &inside {
            for &j in &outside {
                t = div(&(t * (&x[i] - q * &x[j])), &(&x[i] - &x[j]))?;
            }
        }
        acc += t;
    }
    Ok(acc)
}

pub fn verify_subset_sum(n: usize, kmax: usize, points: usize, seed: u64) -> Result<VerifyReport> {
    if n == 0 {
        return Err(HlqError::InvalidParameter("need at least one variable".into()));
    }
    let mut c = Checker::new("s6.thmpf", seed).param("n", n).param("kmax", kmax);
    c.bound("points", points);
    let names = x_names(n);
    let mut vars: Vec<&str> = names.iter().map(String::as_str).collect();
    vars.push("q");
    let vals = PointSampler::new(seed).evaluate(points, &vars, &["q"], |pt| {
        let x: Vec<BigRational> = names.iter().map(|s| pt.get(s).clone()).collect();
        let q = pt.get("q");
        let table = eval_p_all(&x, q, kmax)?;
        (0..=kmax)
            .map(|k| {
                let mut lhs = BigRational::zero();
                for (l, v) in &table {
                    if l.first() <= k {
                        lhs += rpow(q, l.n_stat() as i64)? * v;
                    }
                }
                Ok((lhs, subset_sum(&x, q, k as i64)?))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    for (pt, per_k) in &vals {
        for (k, (l, r)) in per_k.iter().enumerate() {
            c.point(pt, &format!("u^{k}"), l, r);
        }
    }
    Ok(c.finish())
}

// ---------------------------------------------------------------------------
// finite-n specializations as z-series

fn z_ring(dz: usize) -> VarRing {
    VarRing::new(&[("z", 1)], DegreeBound::total(dz as u32))
}

/// `Σ_{r=0}^n (-1)^r (1 - z q^{2r-1}) z^{(k+1)r} q^{(2k+3)C(r,2)} [n,r]
/// (z/q;q)_r / (z/q;q)_{n+r+1}` through `z^dz`; every coefficient is a
/// Laurent polynomial.
pub fn principal_bounded_rhs(n: usize, k: usize, dz: usize) -> Result<MultiSeries> {
    let ring = z_ring(dz);
    let (n, k) = (n as i64, k as i64);
    let mut acc = ring.zero();
    for r in 0..=n {
        let zdeg = (k + 1) * r;
        if zdeg > dz as i64 {
            break;
        }
        let sign = if r % 2 == 0 { 1 } else { -1 };
        let coef = qbinom(n, r).shift((2 * k + 3) * choose2(r)).scale(&sign.into());
        let mut s = ring.zero();
        s.add_term(vec![zdeg as u32], coef);
        s = s.mul_one_minus(&[1], &LaurentQ::q_pow(2 * r - 1));
        // (z/q;q)_r/(z/q;q)_{n+r+1} = 1/∏_{i=r}^{n+r} (1 - z q^{i-1})
        for i in r..=n + r {
            s = s.div_one_minus(&[1], &LaurentQ::q_pow(i - 1))?;
        }
        acc.add_assign(&s);
    }
    Ok(acc)
}

fn bounded_partitions(n: usize, k: usize, dz: usize) -> Vec<Partition> {
    partitions_up_to(dz, Some(n), Some(k))
}

/// `Σ_{λ_1≤k} z^{|λ|} q^{2n(λ)} (q;q)_n / ((q;q)_{n-ℓ(λ)} b_λ)` from the
/// closed-form principal specialization.
pub fn principal_bounded_closed(n: usize, k: usize, dz: usize) -> MultiSeries {
    let ring = z_ring(dz);
    let mut s = ring.zero();
    for lambda in bounded_partitions(n, k, dz) {
        let v = crate::hallittlewood::spec_principal_p(&lambda, n)
            .as_laurent()
            .expect("principal specializations are polynomials");
        s.add_term(vec![lambda.weight() as u32], v.shift(lambda.n_stat() as i64));
    }
    s
}

/// `Σ_{λ_1≤k} q^{n(λ)} z^{|λ|} P_λ(1, q, …, q^{n-1})`, each `P_λ` built by
/// branching and then specialized.
pub fn principal_bounded_branching(n: usize, k: usize, dz: usize) -> MultiSeries {
    let ring = z_ring(dz);
    let powers: Vec<i64> = (0..n as i64).collect();
    let mut s = ring.zero();
    for lambda in bounded_partitions(n, k, dz) {
        let v = hl_p(&lambda, n, None).value.specialize_q_powers(&powers);
        s.add_term(vec![lambda.weight() as u32], v.shift(lambda.n_stat() as i64));
    }
    s
}

/// The subset-sum right side at `x_i = z q^{i-1}` as a z-series with
/// rational coefficients, for a rational `q`. Inverse powers of `x_i` are
/// expanded as `1/(1 - c/z) = -(z/c)/(1 - z/c)`.
pub fn principal_subset_sum(n: usize, k: usize, dz: usize, q: &BigRational) -> Result<Vec<BigRational>> {
    let one = BigRational::one();
    let mut acc = vec![BigRational::zero(); dz + 1];
    let mul_z = |s: &mut Vec<BigRational>, c: &BigRational, e: usize| {
        let mut out = vec![BigRational::zero(); s.len()];
        for i in 0..s.len() {
            if i + e < s.len() {
                out[i + e] = &s[i] * c;
            }
        }
        *s = out;
    };
    let geometric = |s: &mut Vec<BigRational>, c: &BigRational| {
        for i in 1..s.len() {
            let prev = s[i - 1].clone();
            s[i] += prev * c;
        }
    };
    for mask in 0..(1usize << n) {
        let inside: Vec<i64> = (0..n as i64).filter(|i| mask >> i & 1 == 1).collect();
        let outside: Vec<i64> = (0..n as i64).filter(|i| mask >> i & 1 == 0).collect();
        let m = inside.len() as i64;
        let mut s = vec![BigRational::zero(); dz + 1];
        s[0] = one.clone();
        // (q^{C(m,2)} ∏ x_i)^k = z^{mk} q^{k(C(m,2) + Σ(i-1))}
        let e: i64 = k as i64 * (choose2(m) + inside.iter().sum::<i64>());
        mul_z(&mut s, &rpow(q, e)?, (m * k as i64) as usize);
        let mut scalar = one.clone();
        for &i in &inside {
            // 1/(1 - x_i^{-1} q^{1-m}) with x_i^{-1} q^{1-m} = c/z, c = q^{1-m-i}
            let c = rpow(q, 1 - m - i)?;
            let ci = div(&one, &c)?;
            mul_z(&mut s, &-ci.clone(), 1);
            geometric(&mut s, &ci);
        }
        for &j in &outside {
            geometric(&mut s, &rpow(q, j + m)?);
        }
        for &i in &inside {
            for &j in &outside {
                scalar = div(&(scalar * (rpow(q, i)? - rpow(q, j + 1)?)), &(rpow(q, i)? - rpow(q, j)?))?;
            }
        }
        for (a, b) in acc.iter_mut().zip(s) {
            *a += b * &scalar;
        }
    }
    Ok(acc)
}

/// Which side of the finite-`n` specialization supplies the left sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrincipalForm {
    /// `z^{|λ|} q^{2n(λ)} (q;q)_n/((q;q)_{n-ℓ} b_λ)`.
    ClosedForm,
    /// `q^{n(λ)} z^{|λ|} P_λ(1,…,q^{n-1})` through branching.
    Branching,
}

pub fn verify_principal_bounded(
    n: usize,
    k: usize,
    dz: usize,
    form: PrincipalForm,
    points: usize,
    seed: u64,
) -> Result<VerifyReport> {
    let id = match form {
        PrincipalForm::ClosedForm => "s6.st",
        PrincipalForm::Branching => "s6.st2",
    };
    let mut c = Checker::new(id, seed).param("n", n).param("k", k).param("Dz", dz);
    c.plan(TruncationPlan {
        x_degree: Some(dz as u32),
        q_min: None,
        q_max: None,
        max_weights: vec![dz],
        derivation: "for finite n every z-coefficient on both sides is a Laurent polynomial in q and is \
                     compared in full"
            .into(),
    });
    let ring = z_ring(dz);
    let lhs = match form {
        PrincipalForm::ClosedForm => principal_bounded_closed(n, k, dz),
        PrincipalForm::Branching => principal_bounded_branching(n, k, dz),
    };
    let rhs = principal_bounded_rhs(n, k, dz)?;
    c.series(&lhs, &rhs, &ring.names);
    if form == PrincipalForm::Branching {
        // the same right side reached from the subset-sum form at x_i = z q^{i-1}
        c.bound("points", points);
        let vals = PointSampler::new(seed).evaluate(points, &["q"], &["q"], |pt| {
            let q = pt.get("q");
            let sub = principal_subset_sum(n, k, dz, q)?;
            let direct: Vec<BigRational> = (0..=dz).map(|d| rhs.coeff(&[d as u32]).eval(q)).collect::<Result<_>>()?;
            Ok((sub, direct))
        })?;
        for (pt, (sub, direct)) in &vals {
            for (d, (a, b)) in sub.iter().zip(direct).enumerate() {
                c.point(pt, &format!("subset form z^{d}"), a, b);
            }
        }
        if k >= dz {
            // no row bound below z^dz: the unbounded sum ∏ 1/(1 - z q^i)
            let mut g = ring.one();
            for i in 0..n as i64 {
                g = g.div_one_minus(&[1], &LaurentQ::q_pow(i))?;
            }
            c.series(&lhs, &g, &ring.names);
        }
    }
    Ok(c.finish())
}

// ---------------------------------------------------------------------------
// n → ∞ at z = q^s

/// `Σ_{λ_1≤k} q^{2n(λ)+s|λ|}/b_λ` through `q^cap`.
pub fn limit_lhs(k: usize, s: i64, cap: i64) -> LaurentQ {
    let top = (cap / s.max(1)) as usize;
    let t = InverseQpochTable::new(top, cap);
    let mut acc = LaurentQ::zero();
    for lambda in partitions_up_to(top, None, Some(k)) {
        let e = 2 * lambda.n_stat() as i64 + s * lambda.weight() as i64;
        if e <= cap {
            acc += &inv_b(&lambda, &t).truncate(cap - e).shift(e);
        }
    }
    acc
}

/// `Σ_r (-1)^r q^{s(k+1)r + (2k+3)C(r,2)}/(q;q)_r · (1 - q^{s+2r-1})/(q^{s+r-1};q)_∞`,
/// where the `r = 0` term is `1/(q^s;q)_∞`.
pub fn limit_rhs(k: usize, s: i64, cap: i64) -> LaurentQ {
    let k = k as i64;
    let t = InverseQpochTable::new((cap.max(0) + 1) as usize, cap);
    let mut acc = LaurentQ::zero();
    let mut r = 0i64;
    loop {
        let e = s * (k + 1) * r + (2 * k + 3) * choose2(r);
        if e > cap {
            break;
        }
        let c = cap - e;
        let tail = if r == 0 {
            infinite_product(&[ProductFactor { start: s, step: 1, power: -1 }], c)
        } else {
            let start = s + r - 1;
            let inv = infinite_product(&[ProductFactor { start, step: 1, power: -1 }], c);
            (&LaurentQ::one() - &LaurentQ::q_pow(s + 2 * r - 1)).mul_trunc(&inv, c)
        };
        let sign = if r % 2 == 0 { 1 } else { -1 };
        acc += &t.get(r).mul_trunc(&tail, c).shift(e).scale(&sign.into());
        r += 1;
    }
    acc
}

pub fn verify_limit(k: usize, s: i64, cap: i64, seed: u64) -> Result<VerifyReport> {
    if !(1..=2).contains(&s) {
        return Err(HlqError::InvalidParameter("z must be q or q^2 (s = 1 or 2)".into()));
    }
    let mut c = Checker::new("s6.fulman", seed).param("k", k).param("s", s).param("N", cap);
    c.plan(TruncationPlan {
        x_degree: None,
        q_min: Some(0),
        q_max: Some(cap),
        max_weights: vec![(cap / s) as usize],
        derivation: "summands start at q^{s|λ|} on the left and q^{s(k+1)r+(2k+3)C(r,2)} on the right".into(),
    });
    let lhs = limit_lhs(k, s, cap);
    c.qseries("", &lhs, &limit_rhs(k, s, cap), cap);
    if k == 1 {
        let residues = if s == 1 { [(1, -1), (4, -1)] } else { [(2, -1), (3, -1)] };
        c.qseries("modulus 5 product", &lhs, &eta_quotient(5, &residues, cap), cap);
    }
    Ok(c.finish())
}

/// Default number of random points for this module's point checks.
pub const POINTS: usize = DEFAULT_POINTS;

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn deformed() {
        assert!(verify_deformed_sum(2, 4, DeformedReduction::QZero, 0).unwrap().passed());
        assert_eq!(verify_deformed_sum(2, 4, DeformedReduction::Full, 0).unwrap().status, Status::Inconclusive);
        let (l, r) = deformed_strip_sides(&Partition::empty(), 0).unwrap();
        assert!(l.equals(&r));
        for mu in ["", "1", "2", "1,1"] {
            let rep = verify_deformed_strips(&p(mu), 3, 4, true, 1).unwrap();
            assert!(rep.passed(), "{mu}: {:?}", rep.first_mismatch);
        }
    }

    #[test]
    fn chains() {
        for rank in 2..=3 {
            let rep = verify_rank_extension(rank, 3, 8, 0).unwrap();
            assert!(rep.passed(), "rank {rank}: {:?}", rep.first_mismatch);
        }
        let rep = verify_a3(3, 8, 0).unwrap();
        assert!(rep.passed(), "{:?}", rep.first_mismatch);
    }

    #[test]
    fn bounded_rows() {
        for n in 1..=2 {
            for rows in [BoundedRows::Even, BoundedRows::All] {
                let rep = verify_bounded_rows(n, 2, rows, 3, 5).unwrap();
                assert!(rep.passed(), "{rows:?} n={n}: {:?}", rep.first_mismatch);
            }
            let rep = verify_subset_sum(n, 2, 3, 5).unwrap();
            assert!(rep.passed(), "n={n}: {:?}", rep.first_mismatch);
        }
    }

    #[test]
    fn principal() {
        for n in 1..=3 {
            for k in 1..=2 {
                for form in [PrincipalForm::ClosedForm, PrincipalForm::Branching] {
                    let rep = verify_principal_bounded(n, k, 4, form, 3, 0).unwrap();
                    assert!(rep.passed(), "{form:?} n={n} k={k}: {:?}", rep.first_mismatch);
                }
            }
        }
    }

    #[test]
    fn limit() {
        for k in 0..=2 {
            for s in 1..=2 {
                let rep = verify_limit(k, s, 20, 0).unwrap();
                assert!(rep.passed(), "k={k} s={s}: {:?}", rep.first_mismatch);
            }
        }
    }
}
