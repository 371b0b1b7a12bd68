use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::laurent::LaurentQ;
use crate::error::{HlqError, Result};

/// Exponent vector of a monomial in the formal variables.
pub type Mono = Vec<u32>;

/// Which monomials a [`MultiSeries`] keeps.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct DegreeBound {
    /// Maximum total degree, if any.
    pub total: Option<u32>,
    /// Maximum degree in each variable, if any.
    pub per_var: Option<Vec<u32>>,
}

impl DegreeBound {
    pub fn total(d: u32) -> Self {
        DegreeBound { total: Some(d), per_var: None }
    }

    pub fn per_var(d: Vec<u32>) -> Self {
        DegreeBound { total: None, per_var: Some(d) }
    }

    pub fn unbounded() -> Self {
        DegreeBound::default()
    }

    pub fn admits(&self, m: &[u32]) -> bool {
        if let Some(t) = self.total {
            if m.iter().sum::<u32>() > t {
                return false;
            }
        }
        if let Some(pv) = &self.per_var {
            if m.iter().zip(pv).any(|(e, b)| e > b) {
                return false;
            }
        }
        true
    }

    pub fn is_bounded(&self) -> bool {
        self.total.is_some() || self.per_var.is_some()
    }
}

/// A polynomial in `nvars` formal variables with [`LaurentQ`] coefficients,
/// truncated to a [`DegreeBound`].
///
/// When `qcap` is `Some(c)` the coefficients are only certified through `q^c`
/// and higher terms are dropped; `None` means exact. Products track the cap
/// soundly: if `f` is exact through `c_f` and every term of `g` has exponent at
/// least `floor(g)`, the product is exact through `min(c_f + floor(g),
/// c_g + floor(f))`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiSeries {
    nvars: usize,
    bound: DegreeBound,
    qcap: Option<i64>,
    terms: BTreeMap<Mono, LaurentQ>,
}

impl MultiSeries {
    pub fn zero(nvars: usize, bound: DegreeBound, qcap: Option<i64>) -> Self {
        MultiSeries { nvars, bound, qcap, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, bound: DegreeBound, qcap: Option<i64>, c: LaurentQ) -> Self {
        let mut s = Self::zero(nvars, bound, qcap);
        s.add_term(vec![0; nvars], c);
        s
    }

    pub fn one(nvars: usize, bound: DegreeBound, qcap: Option<i64>) -> Self {
        Self::constant(nvars, bound, qcap, LaurentQ::one())
    }

    /// `c · x^m`.
    pub fn monomial(nvars: usize, bound: DegreeBound, qcap: Option<i64>, m: Mono, c: LaurentQ) -> Self {
        let mut s = Self::zero(nvars, bound, qcap);
        s.add_term(m, c);
        s
    }

    /// An empty series with the same shape.
    pub fn zero_like(&self) -> Self {
        Self::zero(self.nvars, self.bound.clone(), self.qcap)
    }

    pub fn one_like(&self) -> Self {
        Self::one(self.nvars, self.bound.clone(), self.qcap)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn bound(&self) -> &DegreeBound {
        &self.bound
    }

    pub fn qcap(&self) -> Option<i64> {
        self.qcap
    }

    pub fn terms(&self) -> &BTreeMap<Mono, LaurentQ> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[u32]) -> LaurentQ {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Lowest `q`-exponent certified present: the smallest stored exponent,
    /// or `cap + 1` if everything below the cap vanishes.
    pub fn q_floor(&self) -> Option<i64> {
        let present = self.terms.values().filter_map(|c| c.min_exp()).min();
        match (present, self.qcap) {
            (Some(p), Some(c)) => Some(p.min(c + 1)),
            (Some(p), None) => Some(p),
            (None, Some(c)) => Some(c + 1),
            (None, None) => None,
        }
    }

    fn clip(&self, c: LaurentQ) -> LaurentQ {
        match self.qcap {
            Some(cap) => c.truncate(cap),
            None => c,
        }
    }

    /// Adds `c · x^m`, dropping it if it falls outside the bound.
    pub fn add_term(&mut self, m: Mono, c: LaurentQ) {
        debug_assert_eq!(m.len(), self.nvars);
        if !self.bound.admits(&m) {
            return;
        }
        let c = self.clip(c);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &MultiSeries) {
        self.qcap = min_cap(self.qcap, other.qcap);
        if let Some(cap) = self.qcap {
            for c in self.terms.values_mut() {
                *c = c.truncate(cap);
            }
            self.terms.retain(|_, c| !c.is_zero());
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &MultiSeries) -> MultiSeries {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> MultiSeries {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn sub(&self, other: &MultiSeries) -> MultiSeries {
        self.add(&other.neg())
    }

    /// Multiplies every coefficient by an exact `c`.
    pub fn scale(&self, c: &LaurentQ) -> MultiSeries {
        self.scale_capped(c, None)
    }

    /// Multiplies every coefficient by `c`, known only through `q^c_cap`.
    pub fn scale_capped(&self, c: &LaurentQ, c_cap: Option<i64>) -> MultiSeries {
        let k = MultiSeries::constant(self.nvars, self.bound.clone(), c_cap, c.clone());
        self.mul(&k)
    }

    pub fn mul(&self, other: &MultiSeries) -> MultiSeries {
        assert_eq!(self.nvars, other.nvars);
        let cap = product_cap(self, other);
        let bound = self.bound.clone();
        let mut out = MultiSeries::zero(self.nvars, bound, cap);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Mono = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                if !out.bound.admits(&m) {
                    continue;
                }
                let p = match cap {
                    Some(k) => ca.mul_trunc(cb, k),
                    None => ca * cb,
                };
                out.add_term(m, p);
            }
        }
        out
    }

    /// Multiplies by `c · x^m` for an exact Laurent `c`.
    pub fn mul_monomial(&self, m: &[u32], c: &LaurentQ) -> MultiSeries {
        let mono = MultiSeries::monomial(self.nvars, self.bound.clone(), None, m.to_vec(), c.clone());
        self.mul(&mono)
    }

    /// Multiplies by `1 - c · x^m`.
    pub fn mul_one_minus(&self, m: &[u32], c: &LaurentQ) -> MultiSeries {
        self.sub(&self.mul_monomial(m, c))
    }

    /// Divides by `1 - c · x^m`, where `x^m` is a nonconstant monomial, by
    /// expanding the geometric series up to the degree bound.
    pub fn div_one_minus(&self, m: &[u32], c: &LaurentQ) -> Result<MultiSeries> {
        if m.iter().all(|&e| e == 0) {
            return Err(HlqError::InvalidParameter("geometric division needs a nonconstant monomial".into()));
        }
        if !self.bound.is_bounded() {
            return Err(HlqError::InvalidParameter("geometric division needs a degree bound".into()));
        }
        let mut out = self.clone();
        let mut term = self.clone();
        loop {
            term = term.mul_monomial(m, c);
            if term.is_empty() {
                break;
            }
            out.add_assign(&term);
        }
        Ok(out)
    }

    /// Series inverse. The constant coefficient must be a unit `±q^k`, unless
    /// the series is a pure constant, which is then inverted as a power
    /// series in `q` through the cap.
    pub fn inverse(&self) -> Result<MultiSeries> {
        let zero_mono = vec![0; self.nvars];
        let c0 = self.coeff(&zero_mono);
        if c0.is_zero() {
            return Err(HlqError::NonUnit);
        }
        let unit = c0.term_count() == 1 && super::rational::is_unit_int(&c0.coeffs()[0]);
        if !unit {
            if self.terms.len() > 1 {
                return Err(HlqError::NonUnit);
            }
            let cap = self.qcap.ok_or(HlqError::NonUnit)?;
            let lo = c0.min_exp().unwrap();
            let inv = c0.inverse_series(cap - 2 * lo)?;
            return Ok(MultiSeries::constant(self.nvars, self.bound.clone(), Some(cap - 2 * lo), inv));
        }
        if !self.bound.is_bounded() && self.terms.len() > 1 {
            return Err(HlqError::InvalidParameter("series inverse needs a degree bound".into()));
        }
        let c0_inv = LaurentQ::monomial(c0.coeffs()[0].clone(), -c0.min_exp().unwrap());
        // 1/f = c0^-1 · Σ (-h)^k with h = (f - c0)/c0
        let inv0 = MultiSeries::constant(self.nvars, self.bound.clone(), None, c0_inv.clone());
        let mut h = self.clone();
        h.terms.remove(&zero_mono);
        let h = h.scale(&c0_inv).neg();
        let mut out = inv0.clone();
        let mut power = inv0;
        loop {
            power = power.mul(&h);
            if power.is_empty() {
                break;
            }
            out.add_assign(&power);
        }
        Ok(out)
    }

    /// Re-embeds into `nvars` variables, placing variable `i` at `i + offset`.
    pub fn embed(&self, nvars: usize, offset: usize, bound: DegreeBound) -> MultiSeries {
        let mut out = MultiSeries::zero(nvars, bound, self.qcap);
        for (m, c) in &self.terms {
            let mut nm = vec![0; nvars];
            nm[offset..offset + m.len()].copy_from_slice(m);
            out.add_term(nm, c.clone());
        }
        out
    }

    /// Substitutes `x_i → q^{s_i} x_i`.
    pub fn scale_vars_by_q(&self, s: &[i64]) -> MultiSeries {
        let mut out = self.zero_like();
        out.qcap = None;
        let shifts: Vec<i64> = self.terms.keys().map(|m| m.iter().zip(s).map(|(&e, &k)| e as i64 * k).sum()).collect();
        if let Some(cap) = self.qcap {
            let min_shift = shifts.iter().copied().min().unwrap_or(0);
            out.qcap = Some(cap + min_shift);
        }
        for ((m, c), k) in self.terms.iter().zip(shifts) {
            out.add_term(m.clone(), c.shift(k));
        }
        out
    }

    /// Drops `q` terms above `cap` and records the cap.
    pub fn truncate_q(&self, cap: i64) -> MultiSeries {
        let mut out = self.clone();
        out.qcap = min_cap(self.qcap, Some(cap));
        let k = out.qcap.unwrap();
        for c in out.terms.values_mut() {
            *c = c.truncate(k);
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    /// Changes the degree bound, discarding monomials outside the new one.
    pub fn with_bound(&self, bound: DegreeBound) -> MultiSeries {
        let mut out = MultiSeries::zero(self.nvars, bound, self.qcap);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Substitutes `x_i → q^{e_i}` and sums everything to a Laurent
    /// polynomial.
    pub fn specialize_q_powers(&self, e: &[i64]) -> LaurentQ {
        let mut acc = LaurentQ::zero();
        for (m, c) in &self.terms {
            let k: i64 = m.iter().zip(e).map(|(&a, &b)| a as i64 * b).sum();
            acc += &c.shift(k);
        }
        acc
    }

    /// Exact value at rational `x` and `q`.
    pub fn eval(&self, x: &[BigRational], q: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.eval(q)?;
            for (xi, &e) in x.iter().zip(m) {
                for _ in 0..e {
                    v *= xi;
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Sets variable `i` to zero.
    pub fn drop_var(&self, i: usize) -> MultiSeries {
        let mut out = self.clone();
        out.terms.retain(|m, _| m[i] == 0);
        out
    }

    /// Applies `x_i → x_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiSeries {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let mut nm = vec![0; self.nvars];
            for (i, &e) in m.iter().enumerate() {
                nm[perm[i]] = e;
            }
            out.add_term(nm, c.clone());
        }
        out
    }

    /// Swaps variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiSeries {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            nm.swap(i, j);
            out.add_term(nm, c.clone());
        }
        out
    }

    /// Exact quotient by `x_i - x_j` (`i ≠ j`); fails on a remainder.
    pub fn div_var_difference(&self, i: usize, j: usize) -> Result<MultiSeries> {
        // group by the exponents of all variables except x_i; inside each group
        // divide the univariate polynomial in x_i (coefficients carry x_j) by
        // x_i - x_j with synthetic division
        let mut groups: BTreeMap<Mono, BTreeMap<u32, LaurentQ>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut key = m.clone();
            let ei = key[i];
            key[i] = 0;
            groups.entry(key).or_default().insert(ei, c.clone());
        }
        // a polynomial in x_i with coefficients in the other variables; the
        // coefficient of x_i^e is a polynomial in x_j: collect per (rest) key
        // where the x_j exponent is part of the key, so combine by total
        let mut by_rest: BTreeMap<Mono, BTreeMap<(u32, u32), LaurentQ>> = BTreeMap::new();
        for (key, row) in groups {
            let mut rest = key.clone();
            let ej = rest[j];
            rest[j] = 0;
            for (ei, c) in row {
                by_rest.entry(rest.clone()).or_default().insert((ei, ej), c);
            }
        }
        let mut out = self.zero_like();
        out.bound = DegreeBound::unbounded();
        for (rest, poly) in by_rest {
            // homogeneous pieces in (x_i, x_j) of each total degree divide
            // separately
            let mut by_deg: BTreeMap<u32, Vec<LaurentQ>> = BTreeMap::new();
            for ((ei, ej), c) in poly {
                let d = ei + ej;
                let v = by_deg.entry(d).or_insert_with(|| vec![LaurentQ::zero(); d as usize + 1]);
                v[ei as usize] = c;
            }
            for (d, coeffs) in by_deg {
                // f = Σ a_e x_i^e x_j^{d-e}; f/(x_i - x_j) = Σ b_e x_i^e x_j^{d-1-e}
                // with b_{d-1} = a_d, b_{e-1} = a_e + b_e
                if d == 0 {
                    return Err(HlqError::NonCancellation);
                }
                let mut b = vec![LaurentQ::zero(); d as usize];
                b[d as usize - 1] = coeffs[d as usize].clone();
                for e in (1..d as usize).rev() {
                    b[e - 1] = &coeffs[e] + &b[e];
                }
                // remainder check: a_0 + b_0 must vanish
                if !(&coeffs[0] + &b[0]).is_zero() {
                    return Err(HlqError::NonCancellation);
                }
                for (e, c) in b.into_iter().enumerate() {
                    let mut m = rest.clone();
                    m[i] = e as u32;
                    m[j] = d - 1 - e as u32;
                    out.add_term(m, c);
                }
            }
        }
        out.bound = self.bound.clone();
        Ok(out)
    }

    /// Total number of nonzero `q`-coefficients across all monomials.
    pub fn coefficient_count(&self) -> usize {
        self.terms.values().map(|c| c.term_count()).sum()
    }
}

pub(crate) fn min_cap(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn product_cap(f: &MultiSeries, g: &MultiSeries) -> Option<i64> {
    let a = match (f.qcap, g.q_floor()) {
        (Some(c), Some(fl)) => Some(c + fl),
        (Some(c), None) => Some(c),
        (None, _) => None,
    };
    let b = match (g.qcap, f.q_floor()) {
        (Some(c), Some(fl)) => Some(c + fl),
        (Some(c), None) => Some(c),
        (None, _) => None,
    };
    min_cap(a, b)
}

impl fmt::Debug for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiSeries[{} vars, cap {:?}] {{", self.nvars, self.qcap)?;
        for (m, c) in &self.terms {
            write!(f, " {m:?}: {c};")?;
        }
        write!(f, " }}")
    }
}

#[derive(Serialize)]
struct SeriesTerm<'a> {
    exponents: &'a Mono,
    coeff: &'a LaurentQ,
}

impl Serialize for MultiSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<SeriesTerm<'_>> =
            self.terms.iter().map(|(m, c)| SeriesTerm { exponents: m, coeff: c }).collect();
        let mut st = s.serialize_struct("MultiSeries", 4)?;
        st.serialize_field("num_vars", &self.nvars)?;
        st.serialize_field("bound", &self.bound)?;
        st.serialize_field("q_cap", &self.qcap)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(nvars: usize, d: u32, i: usize) -> MultiSeries {
        let mut m = vec![0; nvars];
        m[i] = 1;
        MultiSeries::monomial(nvars, DegreeBound::total(d), None, m, LaurentQ::one())
    }

    #[test]
    fn geometric_inverse() {
        let one = MultiSeries::one(1, DegreeBound::total(3), None);
        let f = one.sub(&x(1, 3, 0));
        let inv = f.inverse().unwrap();
        assert_eq!(inv.len(), 4);
        for k in 0..4u32 {
            assert!(inv.coeff(&[k]).is_one());
        }
        assert_eq!(one.div_one_minus(&[1], &LaurentQ::one()).unwrap(), inv);
        assert_eq!(f.mul(&inv), one);
    }

    #[test]
    fn truncation_discards_high_degree() {
        let a = x(2, 2, 0).add(&x(2, 2, 1));
        let sq = a.mul(&a).mul(&a);
        assert!(sq.is_empty());
        let sq = a.mul(&a);
        assert_eq!(sq.coeff(&[1, 1]), LaurentQ::constant(2));
    }

    #[test]
    fn q_cap_tracking() {
        let b = DegreeBound::total(0);
        let f = MultiSeries::constant(1, b.clone(), Some(5), LaurentQ::from_i64s(0, &[1, 1]));
        let g = MultiSeries::constant(1, b.clone(), None, LaurentQ::q_pow(-2));
        let h = f.mul(&g);
        assert_eq!(h.qcap(), Some(3));
        let qq = MultiSeries::constant(1, b, Some(10), LaurentQ::from_i64s(0, &[1, -1]));
        let inv = qq.inverse().unwrap();
        assert_eq!(inv.coeff(&[0]), LaurentQ::from_i64s(0, &[1; 11]));
    }

    #[test]
    fn divide_by_difference() {
        // x0^2 - x1^2 = (x0 - x1)(x0 + x1)
        let d = DegreeBound::total(4);
        let mut f = MultiSeries::zero(2, d.clone(), None);
        f.add_term(vec![2, 0], LaurentQ::one());
        f.add_term(vec![0, 2], LaurentQ::constant(-1));
        let g = f.div_var_difference(0, 1).unwrap();
        assert_eq!(g, x(2, 4, 0).add(&x(2, 4, 1)));
        assert!(x(2, 4, 0).div_var_difference(0, 1).is_err());
    }

    #[test]
    fn q_scaling_and_specialization() {
        let f = x(2, 3, 0).add(&x(2, 3, 1));
        let g = f.scale_vars_by_q(&[-1, 0]);
        assert_eq!(g.coeff(&[1, 0]), LaurentQ::q_pow(-1));
        assert_eq!(f.specialize_q_powers(&[0, 1]), LaurentQ::from_i64s(0, &[1, 1]));
    }
}
