//! The two-parameter transformation with bounds `(M_1, M_2)`, its shifted
//! form, the `a = b = 1` specialization, the rank-two Euler-type seeds and
//! their first iterate.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{HlqError, Result};
use crate::identities::report::{monomial_name, Checker, TruncationPlan, VerifyReport};
use crate::identities::ring::VarRing;
use crate::qalgebra::eval::{rpoch, rpoch_recip, rpow};
use crate::qalgebra::pochhammer::qbinom_base;
use crate::qalgebra::{qbinom, qpoch, DegreeBound, InverseQpochTable, LaurentQ, MultiSeries, PointSampler, RationalQ};

/// A shift `(k_1, k_2, k_3)` with `k_1 + k_2 + k_3 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Shift(pub [i64; 3]);

impl Shift {
    pub fn new(k: [i64; 3]) -> Result<Self> {
        if k.iter().sum::<i64>() != 0 {
            return Err(HlqError::InvalidParameter(format!("shift {k:?} does not sum to zero")));
        }
        Ok(Shift(k))
    }

    pub fn zero() -> Self {
        Shift([0, 0, 0])
    }

    /// `½ Σ k_i²`, an integer because `Σ k_i = 0`.
    pub fn half_square(&self) -> i64 {
        self.0.iter().map(|k| k * k).sum::<i64>() / 2
    }

    /// Every shift with `|k_i| ≤ bound`.
    pub fn all(bound: i64) -> Vec<Shift> {
        let mut out = Vec::new();
        for k1 in -bound..=bound {
            for k2 in -bound..=bound {
                let k3 = -k1 - k2;
                if k3.abs() <= bound {
                    out.push(Shift([k1, k2, k3]));
                }
            }
        }
        out
    }
}

/// Which summation range the shifted form uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftRange {
    /// `0 ≤ r_i ≤ M_i`.
    Literal,
    /// `r_1 ≥ min(0, -k_3)`, `r_2 ≥ min(0, k_1)`: the image of the unshifted range.
    Extended,
}

struct Bl<'a> {
    a: &'a BigRational,
    b: &'a BigRational,
    q: &'a BigRational,
}

impl Bl<'_> {
    fn ab(&self) -> BigRational {
        self.a * self.b
    }

    /// `1/((q;q)_{M+k3'} (aq;q)_{M+k2'} (abq;q)_{M+k1'})`-type denominators
    /// with the offsets of one row of the shifted form.
    fn row_recip(&self, base: &BigRational, r: i64, offs: [i64; 3]) -> Result<BigRational> {
        let q = self.q;
        let abq = self.ab() * q;
        Ok(rpoch_recip(q, q, r + offs[0])?
            * rpoch_recip(&(base * q), q, r + offs[1])?
            * rpoch_recip(&abq, q, r + offs[2])?)
    }

    fn lhs(&self, m: [i64; 2], k: Shift, range: ShiftRange) -> Result<BigRational> {
        let [k1, k2, k3] = k.0;
        let q = self.q;
        let abq = self.ab() * q;
        let (lo1, lo2) = match range {
            ShiftRange::Literal => (0, 0),
            ShiftRange::Extended => ((-k3).min(0), k1.min(0)),
        };
        let mut acc = BigRational::zero();
        for r1 in lo1..=m[0] {
            for r2 in lo2..=m[1] {
                let e = r1 * r1 - r1 * r2 + r2 * r2;
                let t = rpow(self.a, r1)?
                    * rpow(self.b, r2)?
                    * rpow(q, e)?
                    * rpoch_recip(q, q, m[0] - r1)?
                    * rpoch_recip(q, q, m[1] - r2)?
                    * rpoch(&abq, q, r1 + r2)?
                    * self.row_recip(self.a, r1, [k3, k2, k1])?
                    * self.row_recip(self.b, r2, [-k1, -k2, -k3])?;
                acc += t;
            }
        }
        Ok(acc)
    }

    fn rhs(&self, m: [i64; 2], k: Shift) -> Result<BigRational> {
        let [k1, k2, k3] = k.0;
        let q = self.q;
        let abq = self.ab() * q;
        Ok(rpow(self.a, k1 + k2)?
            * rpow(self.b, k1)?
            * rpow(q, k.half_square())?
            * rpoch(&abq, q, m[0] + m[1])?
            * self.row_recip(self.a, m[0], [k3, k2, k1])?
            * self.row_recip(self.b, m[1], [-k1, -k2, -k3])?)
    }
}

fn check_bounds(m: [i64; 2]) -> Result<()> {
    if m[0] < 0 || m[1] < 0 {
        return Err(HlqError::InvalidParameter("bounds must be non-negative".into()));
    }
    Ok(())
}

/// Exact evaluation of both sides at `points` random rational `(a, b, q)`.
pub fn verify_bailey_points(
    m: [i64; 2],
    shift: Shift,
    range: ShiftRange,
    points: usize,
    seed: u64,
) -> Result<VerifyReport> {
    check_bounds(m)?;
    let id = if shift == Shift::zero() { "bl.bailey" } else { "bl.type2" };
    let mut c =
        Checker::new(id, seed).param("M", m).param("k", shift).param("range", range).param("strategy", "random_points");
    c.bound("points", points);
    let sampler = PointSampler::new(seed);
    let vals = sampler.evaluate(points, &["a", "b", "q"], &["q"], |pt| {
        let bl = Bl { a: pt.get("a"), b: pt.get("b"), q: pt.get("q") };
        Ok((bl.lhs(m, shift, range)?, bl.rhs(m, shift)?))
    })?;
    for (pt, (l, r)) in &vals {
        c.point(pt, "", l, r);
    }
    Ok(c.finish())
}

/// Both sides of the unshifted transformation expanded in `a`, `b` up to the
/// given degrees, with q-series coefficients through `q^cap`.
pub fn verify_bailey_series(m: [i64; 2], deg: u32, cap: i64, seed: u64) -> Result<VerifyReport> {
    check_bounds(m)?;
    let ring = VarRing::new(&[("a", 1), ("b", 1)], DegreeBound::per_var(vec![deg, deg])).with_qcap(cap);
    let mut c = Checker::new("bl.bailey", seed).param("M", m).param("strategy", "series").param("deg", deg);
    c.plan(TruncationPlan {
        x_degree: Some(deg),
        q_min: Some(0),
        q_max: Some(cap),
        max_weights: vec![m[0] as usize, m[1] as usize],
        derivation: "all factors are power series in q with nonnegative exponents".into(),
    });
    let t = InverseQpochTable::new((m[0] + m[1]) as usize, cap);
    let (a, b, ab) = (ring.mono(&[0]), ring.mono(&[1]), ring.mono(&[0, 1]));
    // (abq;q)_s / ((q,aq,abq;q)_r1 (q,bq,abq;q)_r2) as a series
    let block = |r1: i64, r2: i64| -> Result<MultiSeries> {
        let mut s = ring.constant(t.get(r1).mul_trunc(&t.get(r2), cap));
        for i in 1..=r1 + r2 {
            s = s.mul_one_minus(&ab, &LaurentQ::q_pow(i));
        }
        for i in 1..=r1 {
            s = s.div_one_minus(&a, &LaurentQ::q_pow(i))?.div_one_minus(&ab, &LaurentQ::q_pow(i))?;
        }
        for i in 1..=r2 {
            s = s.div_one_minus(&b, &LaurentQ::q_pow(i))?.div_one_minus(&ab, &LaurentQ::q_pow(i))?;
        }
        Ok(s)
    };
    let mut lhs = ring.zero();
    for r1 in 0..=m[0] {
        for r2 in 0..=m[1] {
            let e = r1 * r1 - r1 * r2 + r2 * r2;
            let pref = t.get(m[0] - r1).mul_trunc(&t.get(m[1] - r2), cap).shift(e).truncate(cap);
            lhs.add_assign(&block(r1, r2)?.mul_monomial(&[r1 as u32, r2 as u32], &pref));
        }
    }
    let rhs = block(m[0], m[1])?;
    let names = vec!["a".to_string(), "b".to_string()];
    let mut keys: Vec<&Vec<u32>> = lhs.terms().keys().chain(rhs.terms().keys()).collect();
    keys.sort();
    keys.dedup();
    for k in keys {
        c.qseries(&monomial_name(k, &names), &lhs.coeff(k), &rhs.coeff(k), cap);
    }
    Ok(c.finish())
}

/// Left side of the `a = b = 1` form as one rational function.
pub fn drie_lhs(m: [i64; 2], k: Shift) -> Result<RationalQ> {
    let common = &(&qpoch(m[0])? * &qpoch(m[1])?) * &qpoch(m[0] + m[1])?.pow(2);
    let mut terms = Vec::new();
    for r1 in 0..=m[0] {
        for r2 in 0..=m[1] {
            let s = r1 + r2;
            let mut num = LaurentQ::q_pow(r1 * r1 - r1 * r2 + r2 * r2);
            for ki in k.0 {
                num = &num * &qbinom(s, r1 + ki);
            }
            if num.is_zero() {
                continue;
            }
            let den = &(&qpoch(m[0] - r1)? * &qpoch(m[1] - r2)?) * &qpoch(s)?.pow(2);
            terms.push((num, den));
        }
    }
    RationalQ::sum_over_common(&common, &terms)
}

pub fn drie_rhs(m: [i64; 2], k: Shift) -> Result<RationalQ> {
    let s = m[0] + m[1];
    let mut num = LaurentQ::q_pow(k.half_square());
    for ki in k.0 {
        num = &num * &qbinom(s, m[0] + ki);
    }
    RationalQ::new(num, qpoch(s)?.pow(2))
}

pub fn verify_drie(m: [i64; 2], k: Shift, seed: u64) -> Result<VerifyReport> {
    check_bounds(m)?;
    let mut c = Checker::new("bl.drie", seed).param("M", m).param("k", k);
    c.bound("mode", "canonical rational functions");
    c.exact("", &drie_lhs(m, k)?, &drie_rhs(m, k)?);
    Ok(c.finish())
}

/// Which seed identity of Euler type is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EulerVariant {
    Standard,
    QInverse,
    Modulus3nSeed,
}

const PERMS: [[i64; 3]; 6] = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];

fn perm_sign(w: &[i64; 3]) -> i64 {
    let mut inv = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            if w[i] > w[j] {
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

/// Terms `(k, w, j)` of the finite Euler-type sums: `j_i = 3k_i - w_i + i`
/// with every `j_i ∈ [-M_1, M_2]`, outside of which a binomial vanishes.
fn euler_support(m: [i64; 2]) -> Vec<([i64; 3], [i64; 3], [i64; 3])> {
    let span = (m[0] + m[1] + 4) / 3 + 1;
    let mut out = Vec::new();
    for k1 in -span..=span {
        for k2 in -span..=span {
            let k = [k1, k2, -k1 - k2];
            for w in PERMS {
                let j = [3 * k[0] - w[0] + 1, 3 * k[1] - w[1] + 2, 3 * k[2] - w[2] + 3];
                if j.iter().all(|&x| -m[0] <= x && x <= m[1]) {
                    out.push((k, w, j));
                }
            }
        }
    }
    out
}

/// Twice the q-exponent of one term, from the sums `Σk²`, `Σj²`, `Σ w_i k_i`.
fn euler_sum(m: [i64; 2], twice_exp: impl Fn(i64, i64, i64) -> i64, binom: impl Fn(i64, i64) -> LaurentQ) -> LaurentQ {
    let mut acc = LaurentQ::zero();
    for (k, w, j) in euler_support(m) {
        let kk: i64 = k.iter().map(|x| x * x).sum();
        let jj: i64 = j.iter().map(|x| x * x).sum();
        let wk: i64 = (0..3).map(|i| w[i] * k[i]).sum();
        let e2 = twice_exp(kk, jj, wk);
        debug_assert!(e2 % 2 == 0);
        let mut t = LaurentQ::monomial(perm_sign(&w), e2 / 2);
        for ji in j {
            t = &t * &binom(m[0] + m[1], m[0] + ji);
        }
        acc += &t;
    }
    acc
}

pub fn euler_lhs(m: [i64; 2], variant: EulerVariant) -> LaurentQ {
    match variant {
        EulerVariant::Standard => euler_sum(m, |kk, jj, wk| 3 * kk + jj - 2 * wk, qbinom),
        EulerVariant::QInverse => euler_sum(m, |kk, jj, wk| -3 * kk + jj + 2 * wk, qbinom),
        EulerVariant::Modulus3nSeed => euler_sum(m, |_, jj, _| jj, qbinom),
    }
}

pub fn euler_rhs(m: [i64; 2], variant: EulerVariant) -> LaurentQ {
    let s = m[0] + m[1];
    match variant {
        EulerVariant::Standard => qbinom(s, m[0]),
        EulerVariant::QInverse => qbinom(s, m[0]).shift(2 * m[0] * m[1]),
        EulerVariant::Modulus3nSeed => qbinom_base(s, m[0], 3),
    }
}

pub fn verify_euler_a2(m: [i64; 2], variant: EulerVariant, seed: u64) -> Result<VerifyReport> {
    check_bounds(m)?;
    let mut c = Checker::new("euler.a2", seed).param("M", m).param("variant", variant);
    c.bound("terms", euler_support(m).len());
    let lhs = euler_lhs(m, variant);
    c.laurent("", &lhs, &euler_rhs(m, variant));
    if variant == EulerVariant::QInverse {
        // the same display obtained by literally sending q → 1/q in the
        // standard sum; the Gaussian binomials contribute q^{-3 M_1 M_2}
        let sub = euler_lhs(m, EulerVariant::Standard).subs_power(-1).shift(3 * m[0] * m[1]);
        c.laurent("q->1/q substitution", &lhs, &sub);
    }
    Ok(c.finish())
}

pub fn it1_lhs(m: [i64; 2]) -> LaurentQ {
    euler_sum(m, |kk, jj, wk| 3 * kk + 2 * jj - 2 * wk, qbinom)
}

pub fn it1_rhs(m: [i64; 2]) -> Result<RationalQ> {
    let common = &(&qpoch(m[0])? * &qpoch(m[1])?) * &qpoch(m[0] + m[1])?;
    let num_common = qpoch(m[0] + m[1])?.pow(2);
    let mut terms = Vec::new();
    for r1 in 0..=m[0] {
        for r2 in 0..=m[1] {
            let num = num_common.shift(r1 * r1 - r1 * r2 + r2 * r2);
            let den = &(&(&qpoch(m[0] - r1)? * &qpoch(m[1] - r2)?) * &(&qpoch(r1)? * &qpoch(r2)?)) * &qpoch(r1 + r2)?;
            terms.push((num, den));
        }
    }
    RationalQ::sum_over_common(&common, &terms)
}

pub fn verify_it1(m: [i64; 2], seed: u64) -> Result<VerifyReport> {
    check_bounds(m)?;
    let mut c = Checker::new("euler.it1", seed).param("M", m);
    c.bound("terms", euler_support(m).len());
    c.exact("", &RationalQ::from(it1_lhs(m)), &it1_rhs(m)?);
    Ok(c.finish())
}

/// `(a,b) = (1,1)` value of the shifted form at a rational `q`.
pub fn bailey_at_one(m: [i64; 2], k: Shift, q: &BigRational) -> Result<(BigRational, BigRational)> {
    let one = BigRational::one();
    let bl = Bl { a: &one, b: &one, q };
    Ok((bl.lhs(m, k, ShiftRange::Literal)?, bl.rhs(m, k)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::rational::ratio;

    #[test]
    fn unshifted_points() {
        assert!(verify_bailey_points([0, 0], Shift::zero(), ShiftRange::Literal, 3, 1).unwrap().passed());
        assert!(verify_bailey_points([2, 1], Shift::zero(), ShiftRange::Literal, 5, 1).unwrap().passed());
        let bl = Bl { a: &ratio(2, 3), b: &ratio(5, 7), q: &ratio(1, 5) };
        assert_eq!(bl.lhs([2, 1], Shift::zero(), ShiftRange::Literal).unwrap(), bl.rhs([2, 1], Shift::zero()).unwrap());
    }

    #[test]
    fn shifted_ranges() {
        for k in Shift::all(2) {
            let r = verify_bailey_points([2, 1], k, ShiftRange::Extended, 3, 7).unwrap();
            assert!(r.passed(), "{k:?}: {:?}", r.first_mismatch);
        }
    }

    #[test]
    fn literal_range_misses_negative_rows() {
        // starting both rows at zero only works when no term with r_1 < 0 or
        // r_2 < 0 survives, i.e. k_1 >= 0 and k_3 <= 0
        for k in Shift::all(2) {
            let r = verify_bailey_points([2, 1], k, ShiftRange::Literal, 2, 7).unwrap();
            assert_eq!(r.passed(), k.0[0] >= 0 && k.0[2] <= 0, "{k:?}");
        }
    }

    #[test]
    fn series_form() {
        assert!(verify_bailey_series([1, 1], 3, 12, 0).unwrap().passed());
    }

    #[test]
    fn drie_cases() {
        assert!(verify_drie([0, 0], Shift::zero(), 0).unwrap().passed());
        assert!(verify_drie([2, 2], Shift([1, 0, -1]), 0).unwrap().passed());
        assert!(verify_drie([1, 1], Shift([3, 0, -3]), 0).unwrap().passed());
        assert!(drie_rhs([1, 1], Shift([3, 0, -3])).unwrap().is_zero());
    }

    #[test]
    fn euler_cases() {
        for v in [EulerVariant::Standard, EulerVariant::QInverse, EulerVariant::Modulus3nSeed] {
            assert_eq!(euler_lhs([0, 0], v), LaurentQ::one());
            for m1 in 0..=3 {
                for m2 in 0..=3 {
                    let r = verify_euler_a2([m1, m2], v, 0).unwrap();
                    assert!(r.passed(), "{v:?} {m1} {m2}: {:?}", r.first_mismatch);
                }
            }
        }
        assert!(verify_it1([2, 2], 0).unwrap().passed());
        assert!(verify_it1([0, 0], 0).unwrap().passed());
    }
}
