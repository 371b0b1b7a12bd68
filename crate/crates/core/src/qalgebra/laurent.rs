use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{HlqError, Result};

/// A Laurent polynomial in `q` with big-integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^(min_exp + i)`. The stored vector has
/// nonzero first and last entries; zero is the empty vector with `min_exp = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentQ {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        LaurentQ::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_coeffs(e, vec![c.into()])
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// `1 - c q^e`.
    pub fn one_minus(c: impl Into<BigInt>, e: i64) -> Self {
        Self::one() - Self::monomial(c, e)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_coeffs(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentQ { min_exp, coeffs };
        p.normalize();
        p
    }

    /// Builds from small integer coefficients, lowest power first.
    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for `c q^0`, including zero.
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.min_exp == 0 && self.coeffs.len() == 1)
    }

    /// Lowest exponent with a nonzero coefficient; `None` for zero.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    /// Highest exponent with a nonzero coefficient; `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.min_exp;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `(exponent, coefficient)` for every nonzero term, increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentQ { min_exp: self.min_exp + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.min_exp, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Drops every term of exponent above `max_exp`.
    pub fn truncate(&self, max_exp: i64) -> Self {
        if self.is_zero() || max_exp < self.min_exp {
            return Self::zero();
        }
        let keep = ((max_exp - self.min_exp + 1) as usize).min(self.coeffs.len());
        Self::from_coeffs(self.min_exp, self.coeffs[..keep].to_vec())
    }

    /// Product with every term above `max_exp` discarded.
    pub fn mul_trunc(&self, other: &Self, max_exp: i64) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let lo = self.min_exp + other.min_exp;
        if lo > max_exp {
            return Self::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min((max_exp - lo + 1) as usize);
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(lo, out)
    }

    fn mul_full(&self, other: &Self) -> Self {
        match (self.max_exp(), other.max_exp()) {
            (Some(a), Some(b)) => self.mul_trunc(other, a + b),
            _ => Self::zero(),
        }
    }

    /// `self^k` for `k ≥ 0`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `q → q^k` for a nonzero integer `k`.
    pub fn subs_power(&self, k: i64) -> Self {
        assert!(k != 0, "q -> q^0 is not a ring map on Laurent polynomials");
        if self.is_zero() {
            return Self::zero();
        }
        let terms: Vec<(i64, BigInt)> = self.terms().map(|(e, c)| (e * k, c.clone())).collect();
        Self::from_terms(terms)
    }

    /// Collects `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    /// Exact value at a rational `q`; fails at `q = 0` when negative powers occur.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if q.is_zero() {
            return if self.min_exp < 0 {
                Err(HlqError::ZeroDenominator)
            } else {
                Ok(BigRational::from_integer(self.coeff(0)))
            };
        }
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        Ok(acc * rational_pow(q, self.min_exp))
    }

    /// Exact quotient `self / d`; fails if `d` does not divide `self` in
    /// `Z[q, q^-1]`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(HlqError::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let lead = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let dl = d.coeffs.len();
        if rem.len() < dl {
            return Err(HlqError::InexactDivision);
        }
        let ql = rem.len() - dl + 1;
        let mut quot = vec![BigInt::zero(); ql];
        for i in (0..ql).rev() {
            let top = &rem[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(HlqError::InexactDivision);
            }
            let f = top / lead;
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &f * c;
            }
            quot[i] = f;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(HlqError::InexactDivision);
        }
        Ok(Self::from_coeffs(self.min_exp - d.min_exp, quot))
    }

    /// Power-series inverse through `q^cap`. The lowest term must be `±q^k`.
    pub fn inverse_series(&self, cap: i64) -> Result<Self> {
        let Some(lo) = self.min_exp() else {
            return Err(HlqError::NonUnit);
        };
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(HlqError::NonUnit);
        }
        // f = q^lo g with g(0) = ±1, so 1/f = q^-lo / g
        let len = cap + lo + 1;
        if len <= 0 {
            return Ok(Self::zero());
        }
        let len = len as usize;
        let mut inv = vec![BigInt::zero(); len];
        inv[0] = c0.clone();
        for n in 1..len {
            let mut s = BigInt::zero();
            for k in 1..=n.min(self.coeffs.len() - 1) {
                if !self.coeffs[k].is_zero() && !inv[n - k].is_zero() {
                    s += &self.coeffs[k] * &inv[n - k];
                }
            }
            inv[n] = -(s * c0);
        }
        Ok(Self::from_coeffs(-lo, inv))
    }

    /// The content-free sign-normalized leading coefficient, used by gcds.
    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }
}

pub(crate) fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    min_exp: i64,
    coeffs: Vec<String>,
}

impl Serialize for LaurentQ {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentRepr { min_exp: self.min_exp, coeffs: self.coeffs.iter().map(|c| c.to_string()).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentQ {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = LaurentRepr::deserialize(d)?;
        let coeffs: std::result::Result<Vec<BigInt>, _> = r.coeffs.iter().map(|c| c.parse()).collect();
        Ok(LaurentQ::from_coeffs(r.min_exp, coeffs.map_err(serde::de::Error::custom)?))
    }
}

fn add_impl(a: &LaurentQ, b: &LaurentQ, sign: bool) -> LaurentQ {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if sign { b.clone() } else { -b };
    }
    let lo = a.min_exp.min(b.min_exp);
    let hi = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        out[(a.min_exp - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut out[(b.min_exp - lo) as usize + i];
        if sign {
            *slot += c;
        } else {
            *slot -= c;
        }
    }
    LaurentQ::from_coeffs(lo, out)
}

impl Add for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        add_impl(self, rhs, true)
    }
}

impl Sub for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        add_impl(self, rhs, false)
    }
}

impl Mul for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        self.mul_full(rhs)
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ { min_exp: self.min_exp, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentQ {
            type Output = LaurentQ;
            fn $m(self, rhs: LaurentQ) -> LaurentQ {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentQ> for LaurentQ {
            type Output = LaurentQ;
            fn $m(self, rhs: &LaurentQ) -> LaurentQ {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentQ> for &LaurentQ {
            type Output = LaurentQ;
            fn $m(self, rhs: LaurentQ) -> LaurentQ {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentQ> for LaurentQ {
    fn add_assign(&mut self, rhs: &LaurentQ) {
        if rhs.is_zero() {
            return;
        }
        // fast path when rhs fits inside self's storage
        if !self.is_zero() && rhs.min_exp >= self.min_exp && rhs.max_exp().unwrap() <= self.max_exp().unwrap() {
            let off = (rhs.min_exp - self.min_exp) as usize;
            for (i, c) in rhs.coeffs.iter().enumerate() {
                self.coeffs[off + i] += c;
            }
            self.normalize();
            return;
        }
        *self = add_impl(self, rhs, true);
    }
}

impl AddAssign for LaurentQ {
    fn add_assign(&mut self, rhs: LaurentQ) {
        *self += &rhs;
    }
}

impl SubAssign<&LaurentQ> for LaurentQ {
    fn sub_assign(&mut self, rhs: &LaurentQ) {
        *self += &(-rhs);
    }
}

impl From<i64> for LaurentQ {
    fn from(c: i64) -> Self {
        LaurentQ::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(min: i64, c: &[i64]) -> LaurentQ {
        LaurentQ::from_i64s(min, c)
    }

    #[test]
    fn canonical_form() {
        let p = l(-2, &[0, 0, 3, 0, 0]);
        assert_eq!(p, LaurentQ::monomial(3, 0));
        assert_eq!(l(4, &[0, 0]), LaurentQ::zero());
        assert_eq!(LaurentQ::zero().min_exp(), None);
    }

    #[test]
    fn arithmetic() {
        let a = l(0, &[1, -1]);
        let b = l(0, &[1, 0, -1]);
        assert_eq!(&a * &b, l(0, &[1, -1, -1, 1]));
        assert_eq!(&a - &a, LaurentQ::zero());
        assert_eq!(l(-1, &[1]) * l(1, &[1]), LaurentQ::one());
        assert_eq!((&a * &b).div_exact(&a).unwrap(), b);
        assert!(b.div_exact(&l(0, &[1, 1, 1])).is_err());
    }

    #[test]
    fn inverse() {
        let f = l(0, &[1, -1]);
        assert_eq!(f.inverse_series(3).unwrap(), l(0, &[1, 1, 1, 1]));
        let g = l(-2, &[-1, 2, 5]);
        let inv = g.inverse_series(10).unwrap();
        assert_eq!(g.mul_trunc(&inv, 8), LaurentQ::one());
        assert!(l(0, &[2, 1]).inverse_series(3).is_err());
    }

    #[test]
    fn substitution_and_eval() {
        let p = l(-1, &[1, 0, 2]);
        assert_eq!(p.subs_power(-2), l(-2, &[2, 0, 0, 0, 1]));
        let v = p.eval(&BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(v, BigRational::new(3.into(), 1.into()));
        assert!(p.eval(&BigRational::zero()).is_err());
    }

    #[test]
    fn display_and_json() {
        assert_eq!(l(0, &[1, -1, -1, 1]).to_string(), "1 - q - q^2 + q^3");
        assert_eq!(l(-1, &[-2]).to_string(), "-2q^-1");
        let p = l(-3, &[7, 0, -1]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"min_exp":-3,"coeffs":["7","0","-1"]}"#);
        assert_eq!(serde_json::from_str::<LaurentQ>(&s).unwrap(), p);
    }
}
