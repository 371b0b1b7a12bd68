//! Integer partitions and the horizontal-strip combinatorics built on them.
//!
//! A [`Partition`] is stored without trailing zeros; reading a part past the
//! length returns 0. Enumeration is always in reverse lexicographic order so
//! that every report built on top of it is reproducible.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("malformed partition string {0:?}")]
    Parse(String),
    #[error("strip mask entries must be 0 or 1, got {0}")]
    MaskEntry(u8),
    #[error("malformed strip mask {0:?}")]
    MaskParse(String),
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// The zero partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, dropping zero parts. Fails if the nonzero parts are
    /// not weakly decreasing.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut parts: Vec<usize> = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from any parts, sorting them into decreasing order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// A single row `(k)`; the zero partition for `k = 0`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// A single column `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Largest part, 0 for the zero partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let mut cols = Vec::with_capacity(width);
        for j in 1..=width {
            cols.push(self.0.iter().take_while(|&&p| p >= j).count());
        }
        Partition(cols)
    }

    /// `Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// `Σ λ_i μ_i` with the shorter sequence padded by zeros.
    pub fn dot(&self, other: &Partition) -> usize {
        dot_slices(&self.0, &other.0)
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Multiplicities `m_1, …, m_{λ_1}` in order.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first()];
        for &p in &self.0 {
            m[p - 1] += 1;
        }
        m
    }

    /// `μ ⊂ λ` in the diagram sense.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// Partition with every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    /// Drops the first column of the diagram.
    pub fn without_first_column(&self) -> Partition {
        Partition(self.0.iter().filter(|&&p| p > 1).map(|p| p - 1).collect())
    }
}

fn dot_slices(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by weight first, then lexicographically by parts. Used for map keys
/// so that tables iterate from small to large weight.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Parses `"6,3,3,1"`; `""` and `"0"` give the zero partition.
impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<usize>, _> = t.split(',').map(|p| p.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts).map_err(|_| PartitionError::Parse(s.to_string()))
    }
}

/// Whether `λ − μ` is a horizontal strip: `μ ⊂ λ` and every column gains at
/// most one square.
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    if !lambda.contains(mu) {
        return false;
    }
    // interlacing λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ …
    (1..=lambda.len()).all(|i| mu.part(i) >= lambda.part(i + 1))
}

/// `θ'_j = λ'_j − μ'_j` for `j = 1..=len`; assumes `μ ⊂ λ`.
pub fn column_differences(lambda: &Partition, mu: &Partition, len: usize) -> Vec<usize> {
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    (1..=len).map(|j| lc.part(j) - mc.part(j)).collect()
}

/// A 0/1 vector fixing the first `k` column increments of a strip.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StripMask(Vec<u8>);

impl StripMask {
    pub fn new(bits: Vec<u8>) -> Result<Self, PartitionError> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(PartitionError::MaskEntry(b));
        }
        Ok(StripMask(bits))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `ω_i`, 1-based.
    pub fn get(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    /// `|ω|`.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&b| b as usize).sum()
    }

    /// `J(ω) = { j < k : ω_j = 0, ω_{j+1} = 1 }`, 1-based.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&j| self.get(j) == 0 && self.get(j + 1) == 1).collect()
    }

    /// `I(τ) = { i < k : τ_i = 1, τ_{i+1} = 0 }`, 1-based.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.get(i) == 1 && self.get(i + 1) == 0).collect()
    }

    /// Every mask of length `k`, in binary counting order with `ω_1` as the
    /// most significant bit.
    pub fn all(k: usize) -> Vec<StripMask> {
        (0..(1usize << k)).map(|n| StripMask((0..k).map(|i| ((n >> (k - 1 - i)) & 1) as u8).collect())).collect()
    }
}

impl fmt::Display for StripMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Parses bit strings such as `"0110"`.
impl FromStr for StripMask {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bits: Option<Vec<u8>> = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Some(0),
                '1' => Some(1),
                _ => None,
            })
            .collect();
        match bits {
            Some(b) if !b.is_empty() => Ok(StripMask(b)),
            _ => Err(PartitionError::MaskParse(s.to_string())),
        }
    }
}

/// All partitions of `weight` with at most `max_length` parts, each at most
/// `max_part`, in reverse lexicographic order.
pub fn enumerate_partitions(weight: usize, max_length: Option<usize>, max_part: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let max_len = max_length.unwrap_or(usize::MAX);
    let top = max_part.unwrap_or(weight).min(weight);
    fill(weight, top, max_len, &mut cur, &mut out);
    out
}

fn fill(rest: usize, cap: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=cap.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, max_len, cur, out);
        cur.pop();
    }
}

/// All partitions of weight `0..=max_weight` under the same constraints,
/// grouped by increasing weight.
pub fn partitions_up_to(max_weight: usize, max_length: Option<usize>, max_part: Option<usize>) -> Vec<Partition> {
    (0..=max_weight).flat_map(|w| enumerate_partitions(w, max_length, max_part)).collect()
}

/// Every `λ ⊃ μ` with `λ − μ` a horizontal strip of `boxes` squares, and, when
/// a prefix mask of length `k` is given, `λ'_i − μ'_i = ω_i` for `i ≤ k`.
pub fn strips_over(mu: &Partition, boxes: usize, prefix: Option<&StripMask>) -> Vec<Partition> {
    // row i may grow by at most μ_{i-1} − μ_i (row 1 without bound)
    let rows = mu.len() + 1;
    let mut caps = Vec::with_capacity(rows);
    for i in 1..=rows {
        caps.push(if i == 1 { boxes } else { mu.part(i - 1) - mu.part(i) });
    }
    let mut out = Vec::new();
    let mut add = vec![0usize; rows];
    distribute(0, boxes, &caps, &mut add, &mut |add| {
        let parts: Vec<usize> = (0..rows).map(|i| mu.part(i + 1) + add[i]).collect();
        let lambda = Partition::new(parts).expect("interlacing keeps parts decreasing");
        if let Some(mask) = prefix {
            let diffs = column_differences(&lambda, mu, mask.len());
            if diffs.iter().zip(mask.bits()).any(|(&d, &b)| d != b as usize) {
                return;
            }
        }
        out.push(lambda);
    });
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

fn distribute(row: usize, rest: usize, caps: &[usize], add: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if row == caps.len() {
        if rest == 0 {
            emit(add);
        }
        return;
    }
    let remaining_cap: usize = caps[row + 1..].iter().sum();
    let lo = rest.saturating_sub(remaining_cap);
    for a in lo..=caps[row].min(rest) {
        add[row] = a;
        distribute(row + 1, rest - a, caps, add, emit);
    }
    add[row] = 0;
}

/// Every `ν ⊂ λ` with `λ − ν` a horizontal strip (any size).
pub fn strips_under(lambda: &Partition) -> Vec<Partition> {
    // λ_{i+1} ≤ ν_i ≤ λ_i
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(lambda.len());
    fn rec(lambda: &Partition, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > lambda.len() {
            out.push(Partition::new(cur.clone()).expect("interlacing"));
            return;
        }
        for v in (lambda.part(i + 1)..=lambda.part(i)).rev() {
            cur.push(v);
            rec(lambda, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 1, &mut cur, &mut out);
    out
}

/// All partitions `μ ⊂ λ`, ordered by weight.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(lambda: &Partition, i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > lambda.len() {
            out.push(Partition::new(cur.clone()).expect("decreasing"));
            return;
        }
        for v in 0..=lambda.part(i).min(cap) {
            cur.push(v);
            rec(lambda, i + 1, v, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 1, usize::MAX, &mut cur, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[6, 3, 3, 1]).conjugate(), p(&[4, 3, 3, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::row(5).conjugate(), Partition::column(5));
    }

    #[test]
    fn statistics() {
        assert_eq!(p(&[6, 3, 3, 1]).n_stat(), 12);
        assert_eq!(Partition::empty().n_stat(), 0);
        assert_eq!(p(&[1, 1, 1]).n_stat(), 3);
        assert_eq!(p(&[2, 1]).dot(&p(&[1, 1])), 3);
        assert_eq!(p(&[4, 2]).dot(&Partition::empty()), 0);
        let l = p(&[3, 2]);
        let c = l.conjugate();
        assert_eq!(c.dot(&c), 9);
        assert_eq!(2 * l.n_stat() + l.weight(), 9);
        let l = p(&[2, 2, 1]);
        let c = l.conjugate();
        assert_eq!(c.dot(&c), 13);
        assert_eq!(2 * l.n_stat() + l.weight(), 13);
        let l = p(&[5, 3, 2, 2]);
        assert_eq!(l.multiplicity(3), 1);
        assert_eq!(l.multiplicity(2), 2);
        assert_eq!(l.multiplicity(7), 0);
    }

    #[test]
    fn strip_examples() {
        let lambda = p(&[6, 3, 3, 1]);
        let mu = p(&[4, 3, 1]);
        assert!(is_horizontal_strip(&lambda, &mu));
        assert_eq!(column_differences(&lambda, &mu, 6), vec![1, 1, 1, 0, 1, 1]);
        assert!(is_horizontal_strip(&lambda, &lambda));
        assert!(!is_horizontal_strip(&p(&[2, 2]), &Partition::empty()));
        assert!(!is_horizontal_strip(&p(&[2]), &p(&[3])));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(4, None, None).len(), 5);
        assert_eq!(enumerate_partitions(0, None, None), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(5, Some(2), None), vec![p(&[5]), p(&[4, 1]), p(&[3, 2])]);
        assert_eq!(
            enumerate_partitions(4, None, None),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        let counts: Vec<usize> = (0..=12).map(|w| enumerate_partitions(w, None, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert_eq!(enumerate_partitions(6, None, Some(2)).len(), 4);
    }

    #[test]
    fn strips_over_examples() {
        assert_eq!(strips_over(&Partition::empty(), 2, None), vec![p(&[2])]);
        let mu = p(&[3, 1]);
        assert_eq!(strips_over(&mu, 0, None), vec![mu.clone()]);
        assert_eq!(strips_over(&p(&[1]), 1, None), vec![p(&[2]), p(&[1, 1])]);
    }

    #[test]
    fn strips_over_prefix() {
        let mu = p(&[2, 2, 1]);
        let mask: StripMask = "01".parse().unwrap();
        for lambda in strips_over(&mu, 3, Some(&mask)) {
            assert_eq!(column_differences(&lambda, &mu, 2), vec![0, 1]);
        }
        assert!(StripMask::new(vec![0, 2]).is_err());
        assert!("012".parse::<StripMask>().is_err());
    }

    #[test]
    fn strips_under_matches_filter() {
        let lambda = p(&[4, 2, 2, 1]);
        let under = strips_under(&lambda);
        let brute: Vec<_> = subpartitions(&lambda).into_iter().filter(|nu| is_horizontal_strip(&lambda, nu)).collect();
        assert_eq!(under.len(), brute.len());
        for nu in &brute {
            assert!(under.contains(nu));
        }
    }

    #[test]
    fn mask_sets() {
        let w: StripMask = "0110".parse().unwrap();
        assert_eq!(w.ascents(), vec![1]);
        assert_eq!(w.descents(), vec![3]);
        assert_eq!(w.weight(), 2);
        assert_eq!(StripMask::all(3).len(), 8);
        assert_eq!(w.to_string(), "0110");
    }

    #[test]
    fn parse_and_display() {
        let l: Partition = "6,3,3,1".parse().unwrap();
        assert_eq!(l.to_string(), "6,3,3,1");
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&l).unwrap(), "[6,3,3,1]");
    }
}
