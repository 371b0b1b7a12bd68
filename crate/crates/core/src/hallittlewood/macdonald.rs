//! Two-parameter `(q,t)` quantities attached to diagram squares: hook
//! products `c'_λ` and the strip coefficients `ψ_{λ/μ}(q,t)`, `φ_{λ/μ}(q,t)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{HlqError, Result};
use crate::partition::{column_differences, is_horizontal_strip, Partition};
use crate::qalgebra::laurent::rational_pow;
use crate::qalgebra::{LaurentQ, RationalQ};

/// A polynomial in `q` and `t` with integer coefficients, keyed by
/// `(q-exponent, t-exponent)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(c: i64, qe: u32, te: u32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((qe, te), BigInt::from(c));
        }
        BiPoly { terms }
    }

    /// `1 - q^a t^b`.
    pub fn one_minus(a: u32, b: u32) -> Self {
        &Self::one() - &Self::monomial(1, a, b)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (&(a, b), c)| {
            acc + BigRational::from_integer(c.clone()) * rational_pow(q, a as i64) * rational_pow(t, b as i64)
        })
    }

    /// Sets `q = 0`, leaving a polynomial in `t` (returned in the variable `q`
    /// of [`LaurentQ`]).
    pub fn at_q_zero(&self) -> LaurentQ {
        LaurentQ::from_terms(self.terms.iter().filter(|((a, _), _)| *a == 0).map(|(&(_, b), c)| (b as i64, c.clone())))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            *terms.entry(*k).or_insert_with(BigInt::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        BiPoly { terms }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut terms: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                *terms.entry((a1 + a2, b1 + b2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        BiPoly { terms }
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(&(a, b), c)| format!("{c}q^{a}t^{b}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A quotient of [`BiPoly`]s, kept unreduced. Equality is decided by
/// cross-multiplication, so no bivariate gcd is needed.
#[derive(Clone, Debug)]
pub struct BiRational {
    pub num: BiPoly,
    pub den: BiPoly,
}

impl BiRational {
    pub fn one() -> Self {
        BiRational { num: BiPoly::one(), den: BiPoly::one() }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        BiRational { num: p, den: BiPoly::one() }
    }

    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(HlqError::ZeroDenominator);
        }
        Ok(BiRational { num, den })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q, t);
        if d.is_zero() {
            return Err(HlqError::ZeroDenominator);
        }
        Ok(self.num.eval(q, t) / d)
    }

    /// The `q = 0` value as a rational function of `t`.
    pub fn at_q_zero(&self) -> Result<RationalQ> {
        RationalQ::new(self.num.at_q_zero(), self.den.at_q_zero())
    }

    pub fn equals(&self, other: &BiRational) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Mul for &BiRational {
    type Output = BiRational;
    fn mul(self, rhs: &BiRational) -> BiRational {
        BiRational { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }
}

impl Add for &BiRational {
    type Output = BiRational;
    fn add(self, rhs: &BiRational) -> BiRational {
        if self.den == rhs.den {
            return BiRational { num: &self.num + &rhs.num, den: self.den.clone() };
        }
        BiRational { num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den), den: &self.den * &rhs.den }
    }
}

/// Arm and leg of a square of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MacdonaldSquareData {
    /// `(row, column)`, both 1-based.
    pub square: (usize, usize),
    pub arm: usize,
    pub leg: usize,
}

/// Arm and leg of `(i, j)` in `λ`; `None` if the square is outside `λ`.
pub fn square_data(lambda: &Partition, i: usize, j: usize) -> Option<MacdonaldSquareData> {
    if i == 0 || j == 0 || lambda.part(i) < j {
        return None;
    }
    let conj = lambda.conjugate();
    Some(MacdonaldSquareData { square: (i, j), arm: lambda.part(i) - j, leg: conj.part(j) - i })
}

fn squares(lambda: &Partition) -> Vec<MacdonaldSquareData> {
    let mut out = Vec::new();
    for i in 1..=lambda.len() {
        for j in 1..=lambda.part(i) {
            out.push(square_data(lambda, i, j).expect("inside"));
        }
    }
    out
}

/// `c'_λ(q,t) = ∏_{s ∈ λ} (1 - q^{a(s)+1} t^{ℓ(s)})`.
pub fn macdonald_cprime(lambda: &Partition) -> BiPoly {
    squares(lambda).iter().fold(BiPoly::one(), |acc, s| &acc * &BiPoly::one_minus(s.arm as u32 + 1, s.leg as u32))
}

/// `b_λ(s) = (1 - q^{a} t^{ℓ+1}) / (1 - q^{a+1} t^{ℓ})`, and 1 outside `λ`.
pub fn b_square(lambda: &Partition, i: usize, j: usize) -> BiRational {
    match square_data(lambda, i, j) {
        None => BiRational::one(),
        Some(s) => BiRational {
            num: BiPoly::one_minus(s.arm as u32, s.leg as u32 + 1),
            den: BiPoly::one_minus(s.arm as u32 + 1, s.leg as u32),
        },
    }
}

fn strip_data(lambda: &Partition, mu: &Partition) -> Result<(Vec<usize>, Vec<usize>)> {
    if !is_horizontal_strip(lambda, mu) {
        return Err(HlqError::NotStrip(format!("{lambda}/{mu}")));
    }
    let rows: Vec<usize> = (1..=lambda.len()).map(|i| lambda.part(i) - mu.part(i)).collect();
    let cols = column_differences(lambda, mu, lambda.first());
    Ok((rows, cols))
}

/// `ψ_{λ/μ}(q,t) = ∏ b_μ(s)/b_λ(s)` over squares `s = (i,j)` of `μ` whose row
/// meets the strip (`θ_i > 0`) and whose column does not (`θ'_j = 0`).
pub fn macdonald_psi(lambda: &Partition, mu: &Partition) -> Result<BiRational> {
    let (rows, cols) = strip_data(lambda, mu)?;
    let mut acc = BiRational::one();
    for i in 1..=mu.len() {
        if rows.get(i - 1).copied().unwrap_or(0) == 0 {
            continue;
        }
        for j in 1..=mu.part(i) {
            if cols.get(j - 1).copied().unwrap_or(0) != 0 {
                continue;
            }
            let ratio = &b_square(mu, i, j) * &b_square(lambda, i, j).recip()?;
            acc = &acc * &ratio;
        }
    }
    Ok(acc)
}

/// `φ_{λ/μ}(q,t) = ∏ b_λ(s)/b_μ(s)` over squares `s = (i,j)` of `λ` whose
/// column meets the strip (`θ'_j > 0`), with `b_μ(s) = 1` for `s ∉ μ`.
pub fn macdonald_phi(lambda: &Partition, mu: &Partition) -> Result<BiRational> {
    let (_, cols) = strip_data(lambda, mu)?;
    let mut acc = BiRational::one();
    for i in 1..=lambda.len() {
        for j in 1..=lambda.part(i) {
            if cols.get(j - 1).copied().unwrap_or(0) == 0 {
                continue;
            }
            let ratio = &b_square(lambda, i, j) * &b_square(mu, i, j).recip()?;
            acc = &acc * &ratio;
        }
    }
    Ok(acc)
}

/// `t^k` as a [`BiPoly`].
pub fn t_pow(k: u32) -> BiPoly {
    BiPoly::monomial(1, 0, k)
}

/// `1/(q;q)_j` evaluated at a rational `q`.
pub fn inv_qpoch_value(q: &BigRational, j: usize) -> Result<BigRational> {
    let mut acc = BigRational::one();
    for i in 1..=j {
        acc *= BigRational::one() - rational_pow(q, i as i64);
    }
    if acc.is_zero() {
        return Err(HlqError::ZeroDenominator);
    }
    Ok(acc.recip())
}
