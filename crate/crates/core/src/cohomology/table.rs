use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::series;
use crate::monomial::MonomialIdeal;

use super::chain::{borel_chain, BorelChain};

/// `h^i(t)` of `R/I` for `0 <= i <= d` and `t0 <= t <= t1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub nvars: usize,
    pub dim: usize,
    pub window: (i64, i64),
    /// `h[i][t - t0]`.
    pub h: Vec<Vec<BigInt>>,
    /// Ends `a_0..a_d`, `None` for minus infinity.
    pub a: Vec<Option<i64>>,
}

impl CohomologyTable {
    pub fn value(&self, i: usize, t: i64) -> Option<&BigInt> {
        let (t0, t1) = self.window;
        if i > self.dim || t < t0 || t > t1 {
            return None;
        }
        Some(&self.h[i][(t - t0) as usize])
    }

    /// `reg(R/I) = max_i (a_i + i)`.
    pub fn regularity(&self) -> i64 {
        self.reg_k(0).unwrap_or(0)
    }

    /// `reg_k = max{a_i + i : k <= i <= d}`.
    pub fn reg_k(&self, k: usize) -> Option<i64> {
        self.a.iter().enumerate().skip(k).filter_map(|(i, a)| a.map(|a| a + i as i64)).max()
    }

    pub fn reg_list(&self) -> Vec<Option<i64>> {
        (0..=self.dim).map(|k| self.reg_k(k)).collect()
    }

    /// Non-zero rows.
    pub fn nonzero_indices(&self) -> Vec<usize> {
        (0..=self.dim).filter(|&i| self.a[i].is_some()).collect()
    }
}

/// `[-(reg + d + 5), reg + 5]`.
pub fn default_window(reg: i64, d: usize) -> (i64, i64) {
    (-(reg + d as i64 + 5), reg + 5)
}

pub fn table_from_chain(chain: &BorelChain, window: (i64, i64)) -> CohomologyTable {
    let d = chain.dim();
    let (t0, t1) = window;
    let h = (0..=d).map(|i| (t0..=t1).map(|t| chain.h(i, t)).collect()).collect();
    let a = (0..=d).map(|i| chain.a(i)).collect();
    CohomologyTable { nvars: chain.nvars, dim: d, window, h, a }
}

/// Local cohomology of a Borel-type `R/I`; `None` selects the default window.
pub fn local_cohomology(i: &MonomialIdeal, window: Option<(i64, i64)>) -> Result<CohomologyTable> {
    let chain = borel_chain(i)?;
    let window = window.unwrap_or_else(|| default_window(chain.regularity(), chain.dim()));
    if window.0 > window.1 {
        return Err(Error::InvalidInput(format!("empty window {}:{}", window.0, window.1)));
    }
    Ok(table_from_chain(&chain, window))
}

/// Outcome of the Grothendieck-Serre check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GsCheck {
    pub passed: bool,
    /// `(t, P(t) - H(t) - sum (-1)^{i+1} h^i(t))`.
    pub residuals: Vec<(i64, BigInt)>,
}

/// `H(t)` of `R/I` for every integer `t`, zero in negative degrees.
fn hilbert_value(s: &crate::hilbert::HilbertSeries, t: i64) -> BigInt {
    if t < 0 {
        BigInt::zero()
    } else {
        s.value(t as u64)
    }
}

/// Checks `P(t) - H(t) = sum_i (-1)^{i+1} h^i(t)` over the table's window.
pub fn gs_check_table(i: &MonomialIdeal, table: &CohomologyTable) -> GsCheck {
    let s = series(i);
    let p = s.polynomial();
    let (t0, t1) = table.window;
    let residuals: Vec<(i64, BigInt)> = (t0..=t1)
        .map(|t| {
            let mut r = p.eval_i64(t) - hilbert_value(&s, t);
            for k in 0..=table.dim {
                let h = &table.h[k][(t - t0) as usize];
                if k % 2 == 0 {
                    r += h;
                } else {
                    r -= h;
                }
            }
            (t, r)
        })
        .collect();
    GsCheck { passed: residuals.iter().all(|(_, r)| r.is_zero()), residuals }
}

pub fn gs_check(i: &MonomialIdeal, window: (i64, i64)) -> Result<GsCheck> {
    let table = local_cohomology(i, Some(window))?;
    Ok(gs_check_table(i, &table))
}
