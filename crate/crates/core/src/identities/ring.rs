//! Named variable groups inside one truncated series ring, plus the product
//! factors that recur on the right-hand sides.

use crate::error::Result;
use crate::hallittlewood::VarLayout;
use crate::qalgebra::{DegreeBound, LaurentQ, Mono, MultiSeries};

#[derive(Debug, Clone)]
pub struct VarRing {
    pub names: Vec<String>,
    pub groups: Vec<Vec<usize>>,
    pub bound: DegreeBound,
    pub qcap: Option<i64>,
}

impl VarRing {
    /// Groups such as `[("x", 2), ("y", 2)]` become variables `x1 x2 y1 y2`.
    pub fn new(groups: &[(&str, usize)], bound: DegreeBound) -> Self {
        let mut names = Vec::new();
        let mut idx = Vec::new();
        for (prefix, count) in groups {
            let mut g = Vec::new();
            for i in 1..=*count {
                g.push(names.len());
                names.push(if *count == 1 && prefix.len() > 1 { prefix.to_string() } else { format!("{prefix}{i}") });
            }
            idx.push(g);
        }
        VarRing { names, groups: idx, bound, qcap: None }
    }

    pub fn with_qcap(mut self, cap: i64) -> Self {
        self.qcap = Some(cap);
        self
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn group(&self, g: usize) -> &[usize] {
        &self.groups[g]
    }

    pub fn zero(&self) -> MultiSeries {
        MultiSeries::zero(self.nvars(), self.bound.clone(), self.qcap)
    }

    pub fn one(&self) -> MultiSeries {
        MultiSeries::one(self.nvars(), self.bound.clone(), self.qcap)
    }

    pub fn constant(&self, c: LaurentQ) -> MultiSeries {
        MultiSeries::constant(self.nvars(), self.bound.clone(), self.qcap, c)
    }

    /// Exponent vector of the product of `vars` (repeats allowed).
    pub fn mono(&self, vars: &[usize]) -> Mono {
        let mut m = vec![0; self.nvars()];
        for &v in vars {
            m[v] += 1;
        }
        m
    }

    /// Branching layout for the variables of group `g`.
    pub fn layout(&self, g: usize) -> VarLayout {
        VarLayout { nvars: self.nvars(), vars: self.groups[g].clone(), bound: self.bound.clone() }
    }
}

/// `s / (1 - c·x^m)`.
pub fn over_one_minus(s: &MultiSeries, m: &[u32], c: &LaurentQ) -> Result<MultiSeries> {
    s.div_one_minus(m, c)
}

/// `s · (1 - a·x^m) / (1 - b·x^m)`.
pub fn ratio_factor(s: &MultiSeries, m: &[u32], a: &LaurentQ, b: &LaurentQ) -> Result<MultiSeries> {
    s.mul_one_minus(m, a).div_one_minus(m, b)
}

/// `s · ∏_i 1/(1 - x_i)` over the variables of one group.
pub fn geometric_all(s: &MultiSeries, ring: &VarRing, g: usize) -> Result<MultiSeries> {
    let mut out = s.clone();
    for &v in ring.group(g) {
        out = out.div_one_minus(&ring.mono(&[v]), &LaurentQ::one())?;
    }
    Ok(out)
}

/// `s · ∏_{i,j} (1 - A x_i y_j)/(1 - q^{-1} A x_i y_j)` with `A` the product
/// of the variables `extra`.
pub fn pid_kernel(s: &MultiSeries, ring: &VarRing, gx: usize, gy: usize, extra: &[usize]) -> Result<MultiSeries> {
    let mut out = s.clone();
    for &x in ring.group(gx) {
        for &y in ring.group(gy) {
            let mut vars = vec![x, y];
            vars.extend_from_slice(extra);
            out = ratio_factor(&out, &ring.mono(&vars), &LaurentQ::one(), &LaurentQ::q_pow(-1))?;
        }
    }
    Ok(out)
}
