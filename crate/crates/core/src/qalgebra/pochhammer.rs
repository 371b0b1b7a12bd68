//! q-shifted factorials, Gaussian binomials and truncated infinite products.

use num_bigint::BigInt;
use num_traits::Zero;

use super::laurent::LaurentQ;
use super::series::MultiSeries;
use crate::error::{HlqError, Result};
use crate::partition::Partition;

/// `(q;q)_n = ∏_{i=1}^n (1 - q^i)`.
pub fn qpoch(n: i64) -> Result<LaurentQ> {
    if n < 0 {
        return Err(HlqError::InvalidParameter(format!("(q;q)_{n} needs n >= 0")));
    }
    Ok(qpoch_base(1, 1, n as usize))
}

/// `∏_{i=0}^{n-1} (1 - q^{a + step·i})`.
pub fn qpoch_base(a: i64, step: i64, n: usize) -> LaurentQ {
    let mut acc = LaurentQ::one();
    for i in 0..n as i64 {
        acc = &acc * &LaurentQ::one_minus(1, a + step * i);
    }
    acc
}

/// Gaussian binomial `(q^{n-m+1};q)_m / (q;q)_m` for `m ≥ 0`, zero for
/// `m < 0`. For `n ≥ 0` this vanishes when `m > n`.
pub fn qbinom(n: i64, m: i64) -> LaurentQ {
    if m < 0 || (n >= 0 && m > n) {
        return LaurentQ::zero();
    }
    let num = qpoch_base(n - m + 1, 1, m as usize);
    let den = qpoch_base(1, 1, m as usize);
    num.div_exact(&den).expect("Gaussian binomials are Laurent polynomials")
}

/// Gaussian binomial in base `q^k`.
pub fn qbinom_base(n: i64, m: i64, k: i64) -> LaurentQ {
    qbinom(n, m).subs_power(k)
}

/// q-multinomial `(q;q)_{Σ parts} / ∏ (q;q)_{part}`; zero if a part is negative.
pub fn qmultinom(parts: &[i64]) -> LaurentQ {
    if parts.iter().any(|&p| p < 0) {
        return LaurentQ::zero();
    }
    let mut acc = LaurentQ::one();
    let mut total = 0;
    for &p in parts {
        total += p;
        acc = &acc * &qbinom(total, p);
    }
    acc
}

/// `b_λ(q) = ∏_i (q;q)_{m_i(λ)}`.
pub fn b_lambda(lambda: &Partition) -> LaurentQ {
    lambda.multiplicities().into_iter().filter(|&m| m > 0).fold(LaurentQ::one(), |acc, m| &acc * &qpoch_base(1, 1, m))
}

/// `(a;q)_n = ∏_{i=0}^{n-1} (1 - a q^i)` for a series `a`, truncated like `a`.
pub fn qpoch_at(a: &MultiSeries, n: usize) -> MultiSeries {
    let mut acc = a.one_like();
    for i in 0..n as i64 {
        let factor = a.one_like().sub(&a.scale(&LaurentQ::q_pow(i)));
        acc = acc.mul(&factor);
    }
    acc
}

/// Dense power series in `q` through `q^cap`, used to build products fast.
#[derive(Clone, Debug)]
pub struct DenseSeries {
    coeffs: Vec<BigInt>,
}

impl DenseSeries {
    pub fn one(cap: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); (cap.max(-1) + 1) as usize];
        if !coeffs.is_empty() {
            coeffs[0] = 1.into();
        }
        DenseSeries { coeffs }
    }

    pub fn from_laurent(p: &LaurentQ, cap: i64) -> Self {
        assert!(p.min_exp().unwrap_or(0) >= 0, "dense series hold power series only");
        let mut coeffs = vec![BigInt::zero(); (cap.max(-1) + 1) as usize];
        for (e, c) in p.terms() {
            if e <= cap {
                coeffs[e as usize] = c.clone();
            }
        }
        DenseSeries { coeffs }
    }

    pub fn cap(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Multiplies by `(1 - q^k)^times`, `k ≥ 1`.
    pub fn mul_one_minus(&mut self, k: i64, times: u32) {
        let k = k as usize;
        for _ in 0..times {
            for i in (k..self.coeffs.len()).rev() {
                let t = self.coeffs[i - k].clone();
                self.coeffs[i] -= t;
            }
        }
    }

    /// Divides by `(1 - q^k)^times`, `k ≥ 1`.
    pub fn div_one_minus(&mut self, k: i64, times: u32) {
        let k = k as usize;
        for _ in 0..times {
            for i in k..self.coeffs.len() {
                let t = self.coeffs[i - k].clone();
                self.coeffs[i] += t;
            }
        }
    }

    /// Multiplies by `(1 - q^k)^power` for a signed power.
    pub fn apply(&mut self, k: i64, power: i64) {
        if k > self.cap() {
            return;
        }
        if power >= 0 {
            self.mul_one_minus(k, power as u32);
        } else {
            self.div_one_minus(k, (-power) as u32);
        }
    }

    pub fn to_laurent(&self) -> LaurentQ {
        LaurentQ::from_coeffs(0, self.coeffs.clone())
    }
}

/// `1/(q;q)_k` as a power series through `q^cap`, for every `k ≤ max`.
#[derive(Clone, Debug)]
pub struct InverseQpochTable {
    cap: i64,
    table: Vec<LaurentQ>,
}

impl InverseQpochTable {
    pub fn new(max: usize, cap: i64) -> Self {
        let mut cur = DenseSeries::one(cap);
        let mut table = vec![cur.to_laurent()];
        for k in 1..=max {
            cur.div_one_minus(k as i64, 1);
            table.push(cur.to_laurent());
        }
        InverseQpochTable { cap, table }
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    /// `1/(q;q)_k`; zero for negative `k`.
    pub fn get(&self, k: i64) -> LaurentQ {
        if k < 0 {
            return LaurentQ::zero();
        }
        self.table.get(k as usize).cloned().unwrap_or_else(|| {
            let mut s = DenseSeries::one(self.cap);
            for i in 1..=k {
                s.div_one_minus(i, 1);
            }
            s.to_laurent()
        })
    }
}

/// One family `∏_{i≥0} (1 - q^{start + step·i})^power` of an infinite product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductFactor {
    pub start: i64,
    pub step: i64,
    pub power: i64,
}

/// Truncation of a product of families through `q^cap`; only factors with
/// exponent at most `cap` can affect the result.
pub fn infinite_product(factors: &[ProductFactor], cap: i64) -> LaurentQ {
    let mut s = DenseSeries::one(cap);
    for f in factors {
        assert!(f.start >= 1 && f.step >= 1, "product factors need positive exponents");
        let mut e = f.start;
        while e <= cap {
            s.apply(e, f.power);
            e += f.step;
        }
    }
    s.to_laurent()
}

/// `(q^start; q^step)_∞` through `q^cap`.
pub fn qpoch_inf(start: i64, step: i64, cap: i64) -> LaurentQ {
    infinite_product(&[ProductFactor { start, step, power: 1 }], cap)
}

/// `∏_{n≥1} ∏_{(r,e)} (1 - q^{Mn - M + r})^e` through `q^cap`.
pub fn eta_quotient(modulus: i64, residues: &[(i64, i64)], cap: i64) -> LaurentQ {
    let factors: Vec<ProductFactor> =
        residues.iter().map(|&(r, e)| ProductFactor { start: r, step: modulus, power: e }).collect();
    infinite_product(&factors, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    #[test]
    fn pochhammer_values() {
        assert_eq!(qpoch(0).unwrap(), LaurentQ::one());
        assert_eq!(qpoch(2).unwrap(), LaurentQ::from_i64s(0, &[1, -1, -1, 1]));
        let p3 = qpoch(3).unwrap();
        assert_eq!(p3.max_exp(), Some(6));
        assert_eq!(p3.coeff(0), 1.into());
        assert!(qpoch(-1).is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(qbinom(4, 2), LaurentQ::from_i64s(0, &[1, 1, 2, 1, 1]));
        assert_eq!(qbinom(7, 0), LaurentQ::one());
        assert_eq!(qbinom(2, 3), LaurentQ::zero());
        assert_eq!(qbinom(3, -1), LaurentQ::zero());
        assert_eq!(qbinom_base(2, 1, 3), LaurentQ::from_i64s(0, &[1, 0, 0, 1]));
        // negative top: (q^-1;q)_1/(q;q)_1 = (1 - q^-1)/(1 - q) = -q^-1
        assert_eq!(qbinom(-1, 1), LaurentQ::from_i64s(-1, &[-1]));
        // (q^-2;q)_2/(q;q)_2 = q^-3
        assert_eq!(qbinom(-1, 2), LaurentQ::q_pow(-3));
    }

    #[test]
    fn partition_generating_function() {
        let inv = InverseQpochTable::new(0, 30);
        let pq = qpoch_inf(1, 1, 30);
        let gf = pq.inverse_series(30).unwrap();
        for w in 0..=30 {
            assert_eq!(gf.coeff(w), BigInt::from(enumerate_partitions(w as usize, None, None).len()));
        }
        assert_eq!(inv.get(0), LaurentQ::one());
        assert_eq!(eta_quotient(1, &[(1, -1)], 30), gf);
        assert_eq!(eta_quotient(7, &[], 30), LaurentQ::one());
    }

    #[test]
    fn inverse_table() {
        let t = InverseQpochTable::new(5, 12);
        let prod = t.get(3).mul_trunc(&qpoch(3).unwrap(), 12);
        assert_eq!(prod, LaurentQ::one());
        assert_eq!(t.get(-2), LaurentQ::zero());
        assert_eq!(t.get(8).mul_trunc(&qpoch(8).unwrap(), 12), LaurentQ::one());
    }

    #[test]
    fn multinomial() {
        assert_eq!(qmultinom(&[2, 2]), qbinom(4, 2));
        assert_eq!(qmultinom(&[1, -1]), LaurentQ::zero());
        assert_eq!(b_lambda(&"2,2,1".parse().unwrap()), &qpoch(2).unwrap() * &qpoch(1).unwrap());
    }
}
