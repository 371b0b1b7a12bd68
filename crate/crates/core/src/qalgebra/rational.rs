use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::laurent::LaurentQ;
use crate::error::{HlqError, Result};

fn content(p: &LaurentQ) -> BigInt {
    p.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(p: &LaurentQ) -> LaurentQ {
    if p.is_zero() {
        return LaurentQ::zero();
    }
    let c = content(p);
    let mut out = LaurentQ::from_coeffs(0, p.coeffs().iter().map(|x| x / &c).collect());
    if out.leading().unwrap().is_negative() {
        out = -out;
    }
    out
}

/// Pseudo-remainder of polynomials given as coefficient vectors (lowest first).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap();
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, c) in b.iter().enumerate() {
            r[shift + j] -= &lr * c;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

/// Greatest common divisor in `Z[q]` of the polynomial parts of `a` and `b`
/// (exponent offsets are ignored), with positive leading coefficient.
pub fn poly_gcd(a: &LaurentQ, b: &LaurentQ) -> LaurentQ {
    if a.is_zero() {
        return primitive(b).scale(&content(b));
    }
    if b.is_zero() {
        return primitive(a).scale(&content(a));
    }
    let g_cont = content(a).gcd(&content(b));
    let (mut x, mut y) = (primitive(a), primitive(b));
    if x.coeffs().len() < y.coeffs().len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        if y.coeffs().len() == 1 {
            x = LaurentQ::one();
            break;
        }
        let r = pseudo_rem(x.coeffs(), y.coeffs());
        x = y;
        y = primitive(&LaurentQ::from_coeffs(0, r));
    }
    primitive(&x).scale(&g_cont)
}

/// A reduced quotient of Laurent polynomials in `q`.
///
/// The denominator is a polynomial with nonzero constant term and positive
/// leading coefficient, coprime to the numerator; powers of `q` live in the
/// numerator. This form is unique, so structural equality is equality of
/// rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalQ {
    num: LaurentQ,
    den: LaurentQ,
}

impl RationalQ {
    pub fn zero() -> Self {
        RationalQ { num: LaurentQ::zero(), den: LaurentQ::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentQ::one())
    }

    pub fn from_laurent(p: LaurentQ) -> Self {
        RationalQ { num: p, den: LaurentQ::one() }
    }

    pub fn new(num: LaurentQ, den: LaurentQ) -> Result<Self> {
        if den.is_zero() {
            return Err(HlqError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentQ, den: LaurentQ) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let dshift = den.min_exp().unwrap();
        let nshift = num.min_exp().unwrap();
        let (num, den) = (num.shift(-nshift), den.shift(-dshift));
        let g = poly_gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        if den.leading().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        RationalQ { num: num.shift(nshift - dshift), den }
    }

    pub fn numer(&self) -> &LaurentQ {
        &self.num
    }

    pub fn denom(&self) -> &LaurentQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// The Laurent polynomial this equals, if the denominator is a unit.
    pub fn as_laurent(&self) -> Option<LaurentQ> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else if self.den.coeffs().len() == 1 {
            // den is a positive constant; exact only if it divides num
            self.num.div_exact(&self.den).ok()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(HlqError::ZeroDenominator);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        RationalQ { num: self.num.pow(k), den: self.den.pow(k) }.normalized_sign()
    }

    fn normalized_sign(self) -> Self {
        // powers of coprime pairs stay coprime; only the sign may need fixing
        if self.den.leading().is_some_and(|c| c.is_negative()) {
            RationalQ { num: -self.num, den: -self.den }
        } else {
            self
        }
    }

    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q)?;
        if d.is_zero() {
            return Err(HlqError::ZeroDenominator);
        }
        Ok(self.num.eval(q)? / d)
    }

    /// Adds many terms `n_i / d_i` where every `d_i` divides `common`; one
    /// reduction at the end instead of one per addition.
    pub fn sum_over_common(common: &LaurentQ, terms: &[(LaurentQ, LaurentQ)]) -> Result<Self> {
        let mut acc = LaurentQ::zero();
        for (n, d) in terms {
            let cofactor = common.div_exact(d)?;
            acc += &(n * &cofactor);
        }
        Self::new(acc, common.clone())
    }
}

impl fmt::Debug for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Serialize for RationalQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Add for &RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: &RationalQ) -> RationalQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalQ::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = poly_gcd(&self.den, &rhs.den);
        let a = rhs.den.div_exact(&g).expect("gcd divides");
        let b = self.den.div_exact(&g).expect("gcd divides");
        RationalQ::reduce(&self.num * &a + &rhs.num * &b, &self.den * &a)
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: &RationalQ) -> RationalQ {
        self + &(-rhs)
    }
}

impl Mul for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &RationalQ) -> RationalQ {
        if self.is_zero() || rhs.is_zero() {
            return RationalQ::zero();
        }
        RationalQ::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalQ {
    type Output = RationalQ;
    fn div(self, rhs: &RationalQ) -> RationalQ {
        self * &rhs.recip().expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalQ {
            type Output = RationalQ;
            fn $m(self, rhs: RationalQ) -> RationalQ {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalQ> for RationalQ {
            type Output = RationalQ;
            fn $m(self, rhs: &RationalQ) -> RationalQ {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<LaurentQ> for RationalQ {
    fn from(p: LaurentQ) -> Self {
        RationalQ::from_laurent(p)
    }
}

/// Convenience for tests and examples: `BigRational` from `n/d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub(crate) fn is_unit_int(c: &BigInt) -> bool {
    c.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(min: i64, c: &[i64]) -> LaurentQ {
        LaurentQ::from_i64s(min, c)
    }

    #[test]
    fn gcd_basic() {
        // (1-q)(1+q) and (1-q)(1+q^2)
        let a = l(0, &[1, 0, -1]);
        let b = l(0, &[1, -1, 1, -1]);
        assert_eq!(poly_gcd(&a, &b), l(0, &[-1, 1]));
        assert_eq!(poly_gcd(&l(0, &[2, 4]), &l(0, &[6])), l(0, &[2]));
    }

    #[test]
    fn reduce_cancels() {
        let one_minus_q = l(0, &[1, -1]);
        let r = RationalQ::new(one_minus_q.clone(), one_minus_q).unwrap();
        assert_eq!(r, RationalQ::one());
        assert_eq!(r.eval(&ratio(1, 3)).unwrap(), ratio(1, 1));
        let r = RationalQ::new(l(2, &[1]), l(1, &[-1, 1])).unwrap();
        // q/(q - 1) with positive leading denominator coefficient
        assert_eq!(r.numer(), &l(1, &[1]));
        assert_eq!(r.denom(), &l(0, &[-1, 1]));
    }

    #[test]
    fn field_ops() {
        let a = RationalQ::new(l(0, &[1]), l(0, &[1, -1])).unwrap();
        let b = RationalQ::new(l(1, &[1]), l(0, &[1, -1])).unwrap();
        // 1/(1-q) - q/(1-q) = 1
        assert_eq!(&a - &b, RationalQ::one());
        let p = &a * &b;
        assert_eq!(p.denom(), &l(0, &[1, -2, 1]));
        assert_eq!(&p / &b, a);
        assert!(RationalQ::zero().recip().is_err());
    }

    #[test]
    fn common_denominator_sum() {
        let common = l(0, &[1, -1, -1, 1]);
        let terms = vec![(l(0, &[1]), l(0, &[1, -1])), (l(0, &[1]), l(0, &[1, 0, -1]))];
        let s = RationalQ::sum_over_common(&common, &terms).unwrap();
        let direct = &RationalQ::new(l(0, &[1]), l(0, &[1, -1])).unwrap()
            + &RationalQ::new(l(0, &[1]), l(0, &[1, 0, -1])).unwrap();
        assert_eq!(s, direct);
    }
}
