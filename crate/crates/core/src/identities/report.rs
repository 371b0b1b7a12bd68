//! Structured verification reports and the comparison bookkeeping shared by
//! every check.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use num_rational::BigRational;
use serde::Serialize;
use serde_json::Value;

use crate::qalgebra::{LaurentQ, MultiSeries, RationalPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// The first disagreement found, with both sides rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mismatch {
    Coefficient { monomial: String, lhs: String, rhs: String },
    Point { point: String, lhs: String, rhs: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub identity_id: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub checked_bounds: BTreeMap<String, Value>,
    pub first_mismatch: Option<Mismatch>,
    pub runtime_ms: u64,
    pub seed: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// JSON with the wall-clock field zeroed, for byte-level comparisons.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.runtime_ms = 0;
        serde_json::to_string(&r).expect("reports serialize")
    }

    pub fn bound(&self, key: &str) -> Option<&Value> {
        self.checked_bounds.get(key)
    }
}

/// How far a truncated comparison reaches, and why every compared
/// coefficient is final.
#[derive(Debug, Clone, Default, Serialize)]
pub struct TruncationPlan {
    pub x_degree: Option<u32>,
    pub q_min: Option<i64>,
    pub q_max: Option<i64>,
    pub max_weights: Vec<usize>,
    pub derivation: String,
}

/// Accumulates comparisons for one check and produces its report.
pub struct Checker {
    id: String,
    seed: u64,
    start: Instant,
    params: BTreeMap<String, Value>,
    bounds: BTreeMap<String, Value>,
    mismatch: Option<Mismatch>,
    compared: usize,
    nonconstant: usize,
    truncated: bool,
    forced: Option<Status>,
    q_window: Option<(i64, i64)>,
}

impl Checker {
    pub fn new(id: &str, seed: u64) -> Self {
        Checker {
            id: id.to_string(),
            seed,
            start: Instant::now(),
            params: BTreeMap::new(),
            bounds: BTreeMap::new(),
            mismatch: None,
            compared: 0,
            nonconstant: 0,
            truncated: false,
            forced: None,
            q_window: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(key.to_string(), serde_json::to_value(value).expect("param serializes"));
        self
    }

    pub fn bound(&mut self, key: &str, value: impl Serialize) {
        self.bounds.insert(key.to_string(), serde_json::to_value(value).expect("bound serializes"));
    }

    /// Marks the check as truncated; it can then only pass once a
    /// nonconstant coefficient has been compared.
    pub fn plan(&mut self, plan: TruncationPlan) {
        self.truncated = true;
        self.bound("plan", plan);
    }

    pub fn force(&mut self, status: Status, reason: &str) {
        self.forced = Some(status);
        self.bound("note", reason);
    }

    pub fn failed(&self) -> bool {
        self.mismatch.is_some()
    }

    pub fn compared(&self) -> usize {
        self.compared
    }

    fn record(&mut self, equal: bool, nonconstant: bool, mismatch: impl FnOnce() -> Mismatch) {
        self.compared += 1;
        if nonconstant {
            self.nonconstant += 1;
        }
        if !equal && self.mismatch.is_none() {
            self.mismatch = Some(mismatch());
        }
    }

    fn widen(&mut self, p: &LaurentQ) {
        if let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) {
            self.q_window = Some(match self.q_window {
                None => (lo, hi),
                Some((a, b)) => (a.min(lo), b.max(hi)),
            });
        }
    }

    /// Compares two exact objects as a whole.
    pub fn exact<T: PartialEq + Display>(&mut self, label: &str, lhs: &T, rhs: &T) {
        self.record(lhs == rhs, true, || Mismatch::Coefficient {
            monomial: label.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }

    /// Compares two Laurent polynomials exactly, tracking their q-support.
    pub fn laurent(&mut self, label: &str, lhs: &LaurentQ, rhs: &LaurentQ) {
        self.coefficient(label, false, lhs, rhs);
    }

    /// Like [`Checker::laurent`] for the coefficient of a monomial in other
    /// variables; `positive_degree` marks that monomial as nonconstant.
    pub fn coefficient(&mut self, label: &str, positive_degree: bool, lhs: &LaurentQ, rhs: &LaurentQ) {
        self.widen(lhs);
        self.widen(rhs);
        let nonconstant = positive_degree || !lhs.is_constant() || !rhs.is_constant();
        self.record(lhs == rhs, nonconstant, || Mismatch::Coefficient {
            monomial: label.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }

    /// Compares q-series coefficient by coefficient through `q^cap`.
    pub fn qseries(&mut self, label: &str, lhs: &LaurentQ, rhs: &LaurentQ, cap: i64) {
        let lo = lhs.min_exp().into_iter().chain(rhs.min_exp()).min().unwrap_or(0).min(0);
        for e in lo..=cap {
            let (a, b) = (lhs.coeff(e), rhs.coeff(e));
            self.compared += 1;
            if e != 0 {
                self.nonconstant += 1;
            }
            if a != b && self.mismatch.is_none() {
                let mono = if label.is_empty() { format!("q^{e}") } else { format!("{label}·q^{e}") };
                self.mismatch = Some(Mismatch::Coefficient { monomial: mono, lhs: a.to_string(), rhs: b.to_string() });
            }
        }
        let window = self.q_window.get_or_insert((lo, cap));
        window.0 = window.0.min(lo);
        window.1 = window.1.max(cap);
    }

    /// Compares two multivariate series monomial by monomial.
    pub fn series(&mut self, lhs: &MultiSeries, rhs: &MultiSeries, names: &[String]) {
        let mut keys: Vec<&Vec<u32>> = lhs.terms().keys().chain(rhs.terms().keys()).collect();
        keys.sort();
        keys.dedup();
        for m in keys {
            let (a, b) = (lhs.coeff(m), rhs.coeff(m));
            self.widen(&a);
            self.widen(&b);
            let nonconstant = m.iter().any(|&e| e > 0) || !a.is_constant();
            self.record(a == b, nonconstant, || Mismatch::Coefficient {
                monomial: monomial_name(m, names),
                lhs: a.to_string(),
                rhs: b.to_string(),
            });
        }
    }

    /// Compares two exact values at a sample point.
    pub fn point(&mut self, pt: &RationalPoint, label: &str, lhs: &BigRational, rhs: &BigRational) {
        self.record(lhs == rhs, true, || Mismatch::Point {
            point: if label.is_empty() { pt.to_string() } else { format!("{pt} [{label}]") },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }

    pub fn finish(mut self) -> VerifyReport {
        let status = if self.mismatch.is_some() {
            Status::Fail
        } else if let Some(s) = self.forced {
            s
        } else if self.compared == 0 || (self.truncated && self.nonconstant == 0) {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        self.bound("compared", self.compared);
        if let Some((lo, hi)) = self.q_window {
            self.bound("q_window", [lo, hi]);
        }
        VerifyReport {
            identity_id: self.id,
            params: self.params,
            status,
            checked_bounds: self.bounds,
            first_mismatch: self.mismatch,
            runtime_ms: self.start.elapsed().as_millis() as u64,
            seed: self.seed,
        }
    }
}

/// Renders an exponent vector as `x1^2*y1`, or `1` for the constant.
pub fn monomial_name(m: &[u32], names: &[String]) -> String {
    let parts: Vec<String> = m
        .iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_rules() {
        let mut c = Checker::new("t", 1);
        c.laurent("a", &LaurentQ::one(), &LaurentQ::one());
        assert_eq!(c.finish().status, Status::Pass);

        let mut c = Checker::new("t", 1);
        c.plan(TruncationPlan::default());
        c.qseries("", &LaurentQ::one(), &LaurentQ::one(), 0);
        assert_eq!(c.finish().status, Status::Inconclusive);

        let mut c = Checker::new("t", 1);
        c.laurent("a", &LaurentQ::one(), &LaurentQ::q_pow(1));
        c.laurent("b", &LaurentQ::one(), &LaurentQ::q_pow(2));
        let r = c.finish();
        assert_eq!(r.status, Status::Fail);
        assert!(matches!(r.first_mismatch, Some(Mismatch::Coefficient { ref monomial, .. }) if monomial == "a"));
    }

    #[test]
    fn names() {
        let n: Vec<String> = ["x1", "x2", "y1"].iter().map(|s| s.to_string()).collect();
        assert_eq!(monomial_name(&[2, 0, 1], &n), "x1^2*y1");
        assert_eq!(monomial_name(&[0, 0, 0], &n), "1");
    }
}
