//! Hall-Littlewood polynomials by adding one variable at a time:
//! `P_{λ/ν}(x_1..x_n) = Σ_μ ψ_{λ/μ} x_n^{|λ-μ|} P_{μ/ν}(x_1..x_{n-1})`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::strip::{phi_coeff, psi_coeff};
use crate::error::Result;
use crate::parallel;
use crate::partition::{strips_over, strips_under, Partition};
use crate::qalgebra::{b_lambda, DegreeBound, LaurentQ, MultiSeries};

/// Which skew family a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `P_{λ/ν}`, single-variable coefficient `ψ`.
    P,
    /// `Q_{λ/ν}`, single-variable coefficient `φ`.
    Q,
}

/// A Hall-Littlewood polynomial together with its index and variable count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HLPolynomial {
    pub partition: Partition,
    pub num_vars: usize,
    pub value: MultiSeries,
}

/// Where the variables of a table live inside a larger series ring.
#[derive(Debug, Clone)]
pub struct VarLayout {
    /// Total number of series variables.
    pub nvars: usize,
    /// Indices of the variables the table is built in, in branching order.
    pub vars: Vec<usize>,
    pub bound: DegreeBound,
}

impl VarLayout {
    /// `n` variables `0..n` in a ring of exactly those variables.
    pub fn simple(n: usize, max_degree: u32) -> Self {
        VarLayout { nvars: n, vars: (0..n).collect(), bound: DegreeBound::total(max_degree) }
    }
}

fn coefficient(family: Family, lambda: &Partition, mu: &Partition) -> LaurentQ {
    match family {
        Family::P => psi_coeff(lambda, mu),
        Family::Q => phi_coeff(lambda, mu),
    }
    .expect("strips_over yields horizontal strips")
}

/// Every nonzero `P_{λ/ν}` (or `Q_{λ/ν}`) with `|λ| - |ν| ≤ max_boxes` in the
/// variables of `layout`, keyed by `λ`.
pub fn skew_table(
    family: Family,
    nu: &Partition,
    layout: &VarLayout,
    max_boxes: usize,
) -> BTreeMap<Partition, MultiSeries> {
    let base = nu.weight();
    let mut level: BTreeMap<Partition, MultiSeries> = BTreeMap::new();
    level.insert(nu.clone(), MultiSeries::one(layout.nvars, layout.bound.clone(), None));
    for &var in &layout.vars {
        let items: Vec<(&Partition, &MultiSeries)> = level.iter().collect();
        let contributions = parallel::map(&items, |(mu, series)| {
            let room = max_boxes - (mu.weight() - base);
            let mut out = Vec::new();
            for boxes in 0..=room {
                for lambda in strips_over(mu, boxes, None) {
                    let c = coefficient(family, &lambda, mu);
                    let mut m = vec![0; layout.nvars];
                    m[var] = boxes as u32;
                    let term = series.mul_monomial(&m, &c);
                    if !term.is_empty() {
                        out.push((lambda, term));
                    }
                }
            }
            out
        });
        let mut next: BTreeMap<Partition, MultiSeries> = BTreeMap::new();
        for (lambda, term) in contributions.into_iter().flatten() {
            match next.get_mut(&lambda) {
                Some(s) => s.add_assign(&term),
                None => {
                    next.insert(lambda, term);
                }
            }
        }
        next.retain(|_, s| !s.is_empty());
        level = next;
    }
    level
}

/// All `P_λ` with `|λ| ≤ max_weight` in the variables of `layout`.
pub fn p_table(layout: &VarLayout, max_weight: usize) -> BTreeMap<Partition, MultiSeries> {
    skew_table(Family::P, &Partition::empty(), layout, max_weight)
}

/// `P_λ(x_1..x_n)` with monomials of total degree above `cutoff` dropped.
pub fn hl_p(lambda: &Partition, n: usize, cutoff: Option<u32>) -> HLPolynomial {
    let deg = cutoff.unwrap_or(lambda.weight() as u32);
    let layout = VarLayout::simple(n, deg);
    let mut memo: BTreeMap<(Partition, usize), MultiSeries> = BTreeMap::new();
    let value = p_rec(lambda, n, &layout, &mut memo);
    HLPolynomial { partition: lambda.clone(), num_vars: n, value }
}

fn p_rec(
    lambda: &Partition,
    k: usize,
    layout: &VarLayout,
    memo: &mut BTreeMap<(Partition, usize), MultiSeries>,
) -> MultiSeries {
    if lambda.len() > k {
        return MultiSeries::zero(layout.nvars, layout.bound.clone(), None);
    }
    if k == 0 {
        return MultiSeries::one(layout.nvars, layout.bound.clone(), None);
    }
    if let Some(v) = memo.get(&(lambda.clone(), k)) {
        return v.clone();
    }
    let mut acc = MultiSeries::zero(layout.nvars, layout.bound.clone(), None);
    for mu in strips_under(lambda) {
        if mu.len() > k - 1 {
            continue;
        }
        let sub = p_rec(&mu, k - 1, layout, memo);
        let c = psi_coeff(lambda, &mu).expect("strips_under yields strips");
        let mut m = vec![0; layout.nvars];
        m[k - 1] = (lambda.weight() - mu.weight()) as u32;
        acc.add_assign(&sub.mul_monomial(&m, &c));
    }
    memo.insert((lambda.clone(), k), acc.clone());
    acc
}

/// `Q_λ = b_λ(q) P_λ`.
pub fn hl_q(lambda: &Partition, n: usize, cutoff: Option<u32>) -> HLPolynomial {
    let p = hl_p(lambda, n, cutoff);
    HLPolynomial { value: p.value.scale(&b_lambda(lambda)), ..p }
}

/// `P_λ(x_1..x_n)` at exact rational `x` and `q` for every `λ` with
/// `λ_1 ≤ max_part`, by the same branching recursion.
pub fn eval_p_all(x: &[BigRational], q: &BigRational, max_part: usize) -> Result<BTreeMap<Partition, BigRational>> {
    let mut level: BTreeMap<Partition, BigRational> = BTreeMap::new();
    level.insert(Partition::empty(), BigRational::one());
    let mut psi_cache: BTreeMap<(Partition, Partition), BigRational> = BTreeMap::new();
    for xv in x {
        let mut next: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (mu, val) in &level {
            // row 1 can grow to max_part, lower rows only up to the row above
            for boxes in 0..=max_part {
                let lams = strips_over(mu, boxes, None);
                let mut xpow = BigRational::one();
                for _ in 0..boxes {
                    xpow *= xv;
                }
                for lambda in lams {
                    if lambda.first() > max_part {
                        continue;
                    }
                    let key = (lambda.clone(), mu.clone());
                    let psi = match psi_cache.get(&key) {
                        Some(v) => v.clone(),
                        None => {
                            let v = psi_coeff(&lambda, mu).expect("strip").eval(q)?;
                            psi_cache.insert(key, v.clone());
                            v
                        }
                    };
                    let term = val * &psi * &xpow;
                    let slot = next.entry(lambda).or_insert_with(BigRational::zero);
                    *slot += term;
                }
            }
        }
        level = next;
    }
    Ok(level)
}
