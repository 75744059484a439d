//! Exhaustive enumeration of squarefree monomial ideals with bounded
//! arithmetic degree. A squarefree ideal is the Stanley-Reisner ideal of a
//! simplicial complex whose facets are its standard pairs, so `adeg` is the
//! number of facets and `dim` the largest facet size.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cohomology::monomial_regularity;
use crate::error::{Error, Result};
use crate::hilbert::{series, HilbertPolynomial};
use crate::monomial::MonomialIdeal;
use crate::ring::FieldSpec;

use super::eval::{eval_bound, Invariants};

pub const EXPLORER_MAX_VARS: usize = 6;
/// Facet sets examined before giving up.
pub const EXPLORER_CAP: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunctionRecord {
    /// `H(0), ..., H(p)` up to the postulation index `p`; `H = P` afterwards.
    #[serde(with = "crate::serde_big::vec")]
    pub values: Vec<BigInt>,
    pub polynomial: HilbertPolynomial,
    /// Ideals realising this function.
    pub count: usize,
    /// Largest `reg I` among them.
    pub max_reg: i64,
    #[serde(with = "crate::serde_big")]
    pub e: BigInt,
    /// Least `adeg` among them.
    pub adeg: u64,
    /// A witness, as its facets.
    pub facets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitenessReport {
    pub n: usize,
    pub a: u64,
    pub d: usize,
    pub ideals: usize,
    pub functions: Vec<HilbertFunctionRecord>,
    /// Largest `reg I` over all ideals.
    pub max_reg: Option<i64>,
    /// `(a(a-1)/2 + a)^{2^{d-2}}`, covering every `e <= adeg <= a`.
    #[serde(with = "crate::serde_big::opt")]
    pub c4_bound: Option<BigInt>,
    /// Every ideal satisfies its own `reg I <= (e(e-1)/2 + adeg)^{2^{d-2}}`.
    pub within_c4: bool,
}

fn mask_vars(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

/// `prod_F (x_i : i not in F)`, intersected over facets.
fn ideal_of(facets: &[u32], n: usize) -> Result<MonomialIdeal> {
    let full = (1u32 << n) - 1;
    let mut acc: Option<MonomialIdeal> = None;
    for &f in facets {
        let p = MonomialIdeal::prime(n, &mask_vars(full & !f, n));
        acc = Some(match acc {
            None => p,
            Some(i) => i.intersect(&p)?,
        });
    }
    acc.ok_or_else(|| Error::InvalidInput("no facets".into()))
}

fn walk(cands: &[u32], start: usize, a: usize, chosen: &mut Vec<u32>, seen: &mut u64, out: &mut Vec<Vec<u32>>) -> Result<()> {
    if !chosen.is_empty() {
        out.push(chosen.clone());
    }
    if chosen.len() == a {
        return Ok(());
    }
    for k in start..cands.len() {
        let f = cands[k];
        if chosen.iter().any(|&g| g & f == g || g & f == f) {
            continue;
        }
        *seen += 1;
        if *seen > EXPLORER_CAP {
            return Err(Error::SizeCap(format!("more than {EXPLORER_CAP} facet sets")));
        }
        chosen.push(f);
        walk(cands, k + 1, a, chosen, seen, out)?;
        chosen.pop();
    }
    Ok(())
}

/// All squarefree monomial ideals in `n` variables with `dim R/I = d` and
/// `adeg <= a`, grouped by Hilbert function.
pub fn finiteness_explorer(n: usize, a: u64, d: usize) -> Result<FinitenessReport> {
    if n == 0 || n > EXPLORER_MAX_VARS {
        return Err(Error::SizeCap(format!("the explorer handles 1 <= n <= {EXPLORER_MAX_VARS}")));
    }
    if d > n {
        return Err(Error::InvalidInput(format!("dimension {d} exceeds {n} variables")));
    }
    let cands: Vec<u32> = (0u32..1 << n).filter(|m| (m.count_ones() as usize) <= d).collect();
    let mut sets = Vec::new();
    let mut seen = 0;
    walk(&cands, 0, a.min(usize::MAX as u64) as usize, &mut Vec::new(), &mut seen, &mut sets)?;
    sets.retain(|s| s.iter().any(|f| f.count_ones() as usize == d));

    let field = FieldSpec::Rationals;
    let mut groups: BTreeMap<(usize, Vec<BigInt>), HilbertFunctionRecord> = BTreeMap::new();
    let mut max_reg: Option<i64> = None;
    let mut within = true;
    for facets in &sets {
        let i = ideal_of(facets, n)?;
        let hs = series(&i);
        let reg = monomial_regularity(&i, &field, Default::default())?.reg_ideal();
        let e = hs.degree();
        let adeg = facets.len() as u64;
        if d >= 2 {
            let inv = Invariants { d: Some(d as u64), e: Some(e.clone()), adeg: Some(BigInt::from(adeg)), ..Default::default() };
            within &= BigInt::from(reg) <= eval_bound("C4", &inv)?;
        }
        max_reg = Some(max_reg.map_or(reg, |m| m.max(reg)));
        let rec = groups.entry((hs.dim, hs.h.clone())).or_insert_with(|| HilbertFunctionRecord {
            values: hs.values(hs.postulation_index()),
            polynomial: hs.polynomial(),
            count: 0,
            max_reg: reg,
            e: e.clone(),
            adeg,
            facets: facets.iter().map(|&f| mask_vars(f, n)).collect(),
        });
        rec.count += 1;
        rec.max_reg = rec.max_reg.max(reg);
        rec.adeg = rec.adeg.min(adeg);
    }
    let c4_bound = if d >= 2 {
        let a = BigInt::from(a);
        let inv = Invariants { d: Some(d as u64), e: Some(a.clone()), adeg: Some(a), ..Default::default() };
        Some(eval_bound("C4", &inv)?)
    } else {
        None
    };
    Ok(FinitenessReport {
        n,
        a,
        d,
        ideals: sets.len(),
        functions: groups.into_values().collect(),
        max_reg,
        c4_bound,
        within_c4: within,
    })
}
