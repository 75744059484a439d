use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::Monomial;

use super::MonomialIdeal;

/// A maximal translated coordinate subspace `head * K[x_F]` outside the ideal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StandardPair {
    pub head: Monomial,
    /// Sorted 0-based variable indices, disjoint from the head's support.
    pub face: Vec<usize>,
}

/// Dimension, degree and arithmetic degree of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeData {
    /// Krull dimension of `R/I`.
    pub dim: usize,
    pub codim: usize,
    pub degree: u64,
    pub adeg: u64,
    /// `adeg_r[k]` is the layer of projective dimension `r = k - 1`, `r = -1..d-1`.
    pub adeg_r: Vec<u64>,
    /// Length of `R/(I, x_{c+1}, ..., x_n)` when finite.
    pub colength_b: Option<u64>,
}

impl DegreeData {
    /// Layer of projective dimension `r`.
    pub fn adeg_layer(&self, r: i64) -> u64 {
        usize::try_from(r + 1).ok().and_then(|k| self.adeg_r.get(k)).copied().unwrap_or(0)
    }
}

fn heads(
    j_f: &MonomialIdeal,
    bumps: &[(usize, MonomialIdeal)],
    free: &[usize],
    bound: &[u32],
    cur: &mut Vec<u32>,
    k: usize,
    out: &mut Vec<Monomial>,
) {
    let m = Monomial::new(cur.clone());
    if j_f.contains(&m) {
        return;
    }
    if k == free.len() {
        if bumps.iter().all(|(j, jj)| jj.contains(&m.strike(*j))) {
            out.push(m);
        }
        return;
    }
    let v = free[k];
    for e in 0..bound[v].max(1) {
        cur[v] = e;
        heads(j_f, bumps, free, bound, cur, k + 1, out);
    }
    cur[v] = 0;
}

/// All standard pairs, sorted.
pub fn standard_pairs(i: &MonomialIdeal) -> Vec<StandardPair> {
    let n = i.nvars();
    if i.is_unit() {
        return Vec::new();
    }
    let bound = i.max_exponents();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let face: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let j_f = face.iter().fold(i.clone(), |acc, &v| acc.var_saturate(v));
        if j_f.is_unit() {
            continue;
        }
        let free: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 0).collect();
        let bumps: Vec<(usize, MonomialIdeal)> = free.iter().map(|&j| (j, j_f.var_saturate(j))).collect();
        let mut hs = Vec::new();
        heads(&j_f, &bumps, &free, &bound, &mut vec![0; n], 0, &mut hs);
        out.extend(hs.into_iter().map(|head| StandardPair { head, face: face.clone() }));
    }
    out.sort();
    out
}

/// Length of `R/I` when finite.
pub fn colength(i: &MonomialIdeal) -> Option<u64> {
    let pairs = standard_pairs(i);
    if pairs.iter().all(|p| p.face.is_empty()) {
        Some(pairs.len() as u64)
    } else {
        None
    }
}

pub fn degree_data(i: &MonomialIdeal) -> Result<DegreeData> {
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = i.nvars();
    let pairs = standard_pairs(i);
    let dim = pairs.iter().map(|p| p.face.len()).max().unwrap_or(0);
    let mut adeg_r = vec![0u64; dim + 1];
    for p in &pairs {
        adeg_r[p.face.len()] += 1;
    }
    let codim = n - dim;
    let kept: Vec<Monomial> = i
        .generators()
        .iter()
        .filter(|g| g.max_var_index() <= codim)
        .map(|g| g.resized(codim))
        .collect();
    let colength_b = colength(&MonomialIdeal::new(codim, kept));
    Ok(DegreeData { dim, codim, degree: adeg_r[dim], adeg: pairs.len() as u64, adeg_r, colength_b })
}
