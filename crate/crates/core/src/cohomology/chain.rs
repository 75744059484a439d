use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::binom::binom_i;
use crate::error::{Error, Result};
use crate::hilbert::series;
use crate::monomial::MonomialIdeal;

/// One link `I_j` of the chain together with `M_j = J_j^sat / J_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub ideal: MonomialIdeal,
    /// `n_j = m(I_j)`, the largest index of a variable in a generator.
    pub n: usize,
    /// `G(I_j)` read in `n_j` variables.
    pub j: MonomialIdeal,
    pub j_sat: MonomialIdeal,
    /// `lengths[u] = l((J_j^sat / J_j)_u)` for `u = 0..=end`.
    pub lengths: Vec<BigInt>,
}

impl ChainStep {
    /// Top non-zero degree of `M_j`, `None` when `M_j = 0`.
    pub fn end(&self) -> Option<i64> {
        self.lengths.iter().rposition(|c| !c.is_zero()).map(|u| u as i64)
    }

    pub fn total_length(&self) -> BigInt {
        self.lengths.iter().sum()
    }

    pub fn length(&self, u: i64) -> BigInt {
        if u < 0 {
            return BigInt::zero();
        }
        self.lengths.get(u as usize).cloned().unwrap_or_default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorelChain {
    pub nvars: usize,
    pub steps: Vec<ChainStep>,
}

/// `(a - b) / (1 - z)^k`, which must be a polynomial.
fn finite_quotient(a: &[BigInt], b: &[BigInt], k: usize) -> Option<Vec<BigInt>> {
    let len = a.len().max(b.len());
    let mut q: Vec<BigInt> = (0..len)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect();
    for _ in 0..k {
        if q.iter().all(|c| c.is_zero()) {
            break;
        }
        if !q.iter().sum::<BigInt>().is_zero() {
            return None;
        }
        let mut run = BigInt::zero();
        let mut next = Vec::with_capacity(q.len());
        for c in &q[..q.len() - 1] {
            run += c;
            next.push(run.clone());
        }
        q = next;
    }
    while q.last().is_some_and(|c| c.is_zero()) {
        q.pop();
    }
    Some(q)
}

fn step(i: &MonomialIdeal) -> Result<ChainStep> {
    let n = i.max_var_index();
    let j = i.resized(n)?;
    // In no variables the irrelevant ideal is the unit ideal.
    let j_sat = if n == 0 { MonomialIdeal::unit(0) } else { j.saturate_first(n) };
    let lengths = finite_quotient(&series(&j).numerator, &series(&j_sat).numerator, n)
        .ok_or_else(|| Error::Hypothesis(format!("J^sat/J has infinite length for {i}")))?;
    Ok(ChainStep { ideal: i.clone(), n, j, j_sat, lengths })
}

/// `I_0 = I`, `I_{j+1} = I_j : x_{n_j}^inf`, stopping before the unit ideal.
pub fn borel_chain(i: &MonomialIdeal) -> Result<BorelChain> {
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !i.is_borel_type() {
        return Err(Error::Hypothesis(format!("{i} is not of Borel type")));
    }
    let mut steps: Vec<ChainStep> = Vec::new();
    let mut cur = i.clone();
    loop {
        let s = step(&cur)?;
        let next = if s.n == 0 { MonomialIdeal::unit(i.nvars()) } else { cur.var_saturate(s.n - 1) };
        steps.push(s);
        if next.is_unit() {
            break;
        }
        cur = next;
    }
    Ok(BorelChain { nvars: i.nvars(), steps })
}

impl BorelChain {
    /// `l`, the index of the last step.
    pub fn l(&self) -> usize {
        self.steps.len() - 1
    }

    /// `c = n_l`.
    pub fn codim(&self) -> usize {
        self.steps.last().map_or(0, |s| s.n)
    }

    pub fn dim(&self) -> usize {
        self.nvars - self.codim()
    }

    /// The step carrying `H^j`, if any.
    pub fn step_for(&self, j: usize) -> Option<&ChainStep> {
        self.steps.iter().find(|s| self.nvars - s.n == j)
    }

    /// `h^j(t)` of `R/I`, exact for every `t`.
    pub fn h(&self, j: usize, t: i64) -> BigInt {
        let Some(s) = self.step_for(j) else {
            return BigInt::zero();
        };
        if j == 0 {
            return s.length(t);
        }
        s.lengths
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(u, c)| c * binom_i(u as i64 - t - 1, j as i64 - 1))
            .sum()
    }

    /// `a_j = end(M) - j`; `None` stands for minus infinity.
    pub fn a(&self, j: usize) -> Option<i64> {
        self.step_for(j).and_then(|s| s.end()).map(|e| e - j as i64)
    }

    /// `reg(R/I) = max_j end(M_j)`.
    pub fn regularity(&self) -> i64 {
        self.steps.iter().filter_map(|s| s.end()).max().unwrap_or(0)
    }
}
