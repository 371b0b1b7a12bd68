//! Exact evaluation at random rational points.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{HlqError, Result};

pub const DEFAULT_SEED: u64 = 0x484C51;
pub const DEFAULT_POINTS: usize = 20;
pub const DEFAULT_HEIGHT: i64 = 10_000;

/// An assignment of exact rationals to named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    pub values: BTreeMap<String, BigRational>,
    pub seed: u64,
}

impl RationalPoint {
    pub fn get(&self, name: &str) -> &BigRational {
        &self.values[name]
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<&String, String> = self.values.iter().map(|(k, v)| (k, v.to_string())).collect();
        m.serialize(s)
    }
}

/// Draws reproducible rational points. Each point has its own stream derived
/// from the base seed, so point `i` does not depend on how many resamples
/// earlier points needed.
#[derive(Clone, Debug)]
pub struct PointSampler {
    seed: u64,
    height: i64,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        PointSampler { seed, height: DEFAULT_HEIGHT }
    }

    pub fn with_height(mut self, height: i64) -> Self {
        self.height = height;
        self
    }

    fn rng_for(&self, index: usize, attempt: usize) -> ChaCha8Rng {
        let mix = self
            .seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add((index as u64) << 20)
            .wrapping_add(attempt as u64);
        ChaCha8Rng::seed_from_u64(mix)
    }

    fn draw(&self, rng: &mut ChaCha8Rng, vars: &[&str], in_unit: &[&str]) -> RationalPoint {
        let mut values = BTreeMap::new();
        for v in vars {
            let value = if in_unit.contains(v) {
                // 0 < value < 1: handy for q so that no factor 1 - q^k vanishes
                let d = rng.gen_range(2..=self.height);
                let n = rng.gen_range(1..d);
                BigRational::new(n.into(), d.into())
            } else {
                let d = rng.gen_range(1..=self.height);
                let mut n = rng.gen_range(-self.height..=self.height);
                if n == 0 {
                    n = 1;
                }
                BigRational::new(n.into(), d.into())
            };
            values.insert(v.to_string(), value);
        }
        RationalPoint { values, seed: self.seed }
    }

    /// Evaluates `f` at `count` points, redrawing a point whenever `f` reports
    /// a vanishing denominator.
    pub fn evaluate<T>(
        &self,
        count: usize,
        vars: &[&str],
        in_unit: &[&str],
        mut f: impl FnMut(&RationalPoint) -> Result<T>,
    ) -> Result<Vec<(RationalPoint, T)>> {
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            let mut attempt = 0;
            loop {
                let mut rng = self.rng_for(i, attempt);
                let pt = self.draw(&mut rng, vars, in_unit);
                match f(&pt) {
                    Ok(v) => {
                        out.push((pt, v));
                        break;
                    }
                    Err(HlqError::ZeroDenominator) if attempt < 64 => attempt += 1,
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(out)
    }
}

/// `x^e` for a signed exponent; fails on `0^{-k}`.
pub fn rpow(x: &BigRational, e: i64) -> Result<BigRational> {
    if e < 0 && x.is_zero() {
        return Err(HlqError::ZeroDenominator);
    }
    Ok(crate::qalgebra::laurent::rational_pow(x, e))
}

/// `(a;q)_n` at rational values for any integer `n`, using
/// `(a;q)_{-m} = 1/(a q^{-m};q)_m`.
pub fn rpoch(a: &BigRational, q: &BigRational, n: i64) -> Result<BigRational> {
    if n >= 0 {
        let mut acc = BigRational::one();
        let mut aq = a.clone();
        for _ in 0..n {
            acc *= BigRational::one() - &aq;
            aq *= q;
        }
        Ok(acc)
    } else {
        let start = a * rpow(q, n)?;
        let d = rpoch(&start, q, -n)?;
        if d.is_zero() {
            return Err(HlqError::ZeroDenominator);
        }
        Ok(d.recip())
    }
}

/// `1/(a;q)_n` at rational values for any integer `n`. Equals
/// `(a q^n;q)_{-n}` for negative `n`, which is how `1/(q;q)_{-m} = 0` arises.
pub fn rpoch_recip(a: &BigRational, q: &BigRational, n: i64) -> Result<BigRational> {
    if n >= 0 {
        let d = rpoch(a, q, n)?;
        if d.is_zero() {
            return Err(HlqError::ZeroDenominator);
        }
        Ok(d.recip())
    } else {
        rpoch(&(a * rpow(q, n)?), q, -n)
    }
}

/// Gaussian binomial at a rational `q`.
pub fn rqbinom(n: i64, m: i64, q: &BigRational) -> Result<BigRational> {
    crate::qalgebra::pochhammer::qbinom(n, m).eval(q)
}

/// Integer `n` as a rational.
pub fn rint(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::rational::ratio;

    #[test]
    fn negative_index_pochhammer() {
        let q = ratio(1, 3);
        let one = BigRational::one();
        // 1/(q;q)_{-2} = (q^{-1};q)_2 = (1 - q^{-1})(1 - 1) = 0
        assert_eq!(rpoch_recip(&q, &q, -2).unwrap(), BigRational::zero());
        let a = ratio(2, 5);
        let v = rpoch(&a, &q, -1).unwrap() * rpoch(&(&a * rpow(&q, -1).unwrap()), &q, 1).unwrap();
        assert_eq!(v, one);
        assert_eq!(rqbinom(4, 2, &rint(2)).unwrap(), rint(35));
    }

    #[test]
    fn sampler_is_deterministic() {
        let s = PointSampler::new(DEFAULT_SEED);
        let a = s.evaluate(5, &["q", "a"], &["q"], |p| Ok(p.get("a").clone())).unwrap();
        let b = s.evaluate(5, &["q", "a"], &["q"], |p| Ok(p.get("a").clone())).unwrap();
        assert_eq!(a, b);
        for (p, _) in &a {
            let q = p.get("q");
            assert!(*q > BigRational::zero() && *q < BigRational::one());
        }
    }

    #[test]
    fn resampling_skips_poles() {
        let s = PointSampler::new(7).with_height(3);
        let mut calls = 0;
        let r = s
            .evaluate(3, &["x"], &[], |p| {
                calls += 1;
                if p.get("x") == &BigRational::one() {
                    Err(HlqError::ZeroDenominator)
                } else {
                    Ok(())
                }
            })
            .unwrap();
        assert_eq!(r.len(), 3);
        assert!(calls >= 3);
    }
}
