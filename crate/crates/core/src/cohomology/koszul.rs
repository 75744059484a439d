//! Combinatorial routes for monomial ideals outside the Borel-type world:
//! multigraded Betti numbers through upper Koszul complexes, and local
//! cohomology of squarefree quotients through links.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binom::binom_i;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::ring::{FieldSpec, Monomial};

use super::simplicial::Complex;
use super::table::CohomologyTable;

/// Largest lcm lattice explored before giving up.
pub const LCM_LATTICE_CAP: usize = 200_000;

fn lcm_lattice(i: &MonomialIdeal) -> Result<Vec<Monomial>> {
    let mut seen: HashSet<Monomial> = i.generators().iter().cloned().collect();
    let mut frontier: Vec<Monomial> = seen.iter().cloned().collect();
    while let Some(m) = frontier.pop() {
        for g in i.generators() {
            let l = m.lcm(g);
            if seen.insert(l.clone()) {
                if seen.len() > LCM_LATTICE_CAP {
                    return Err(Error::SizeCap(format!("lcm lattice above {LCM_LATTICE_CAP} elements")));
                }
                frontier.push(l);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `K^a(I) = {F squarefree : x^a / x^F in I}`.
fn upper_koszul(i: &MonomialIdeal, a: &Monomial) -> Result<Complex> {
    let n = i.nvars();
    if n > 64 {
        return Err(Error::SizeCap("more than 64 variables".into()));
    }
    let ground = a.support().iter().fold(0u64, |m, &v| m | 1 << v);
    Ok(Complex::from_predicate(ground, |f| {
        let mut e = a.exps().to_vec();
        for (v, x) in e.iter_mut().enumerate() {
            if f >> v & 1 == 1 {
                *x -= 1;
            }
        }
        i.contains(&Monomial::new(e))
    }))
}

/// Non-zero graded Betti numbers `beta_{i,j}` of `I` (not `R/I`), keyed by
/// homological degree `i >= 0` and internal degree `j`.
pub fn graded_betti(i: &MonomialIdeal, k: &FieldSpec) -> Result<BTreeMap<(usize, u64), usize>> {
    let mut out = BTreeMap::new();
    for a in lcm_lattice(i)? {
        let c = upper_koszul(i, &a)?;
        for (dim, b) in c.reduced_homology(k) {
            *out.entry(((dim + 1) as usize, a.degree())).or_insert(0) += b;
        }
    }
    Ok(out)
}

/// `reg I = max{j - i : beta_{i,j}(I) != 0}`; `None` for the zero ideal.
pub fn betti_regularity(i: &MonomialIdeal, k: &FieldSpec) -> Result<Option<i64>> {
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(graded_betti(i, k)?.keys().map(|&(h, j)| j as i64 - h as i64).max())
}

/// Stanley-Reisner complex of a squarefree ideal.
pub fn stanley_reisner(i: &MonomialIdeal) -> Result<Complex> {
    if !i.is_squarefree() {
        return Err(Error::Hypothesis(format!("{i} is not squarefree")));
    }
    let n = i.nvars();
    if n > 64 {
        return Err(Error::SizeCap("more than 64 variables".into()));
    }
    let gens: Vec<u64> = i.generators().iter().map(|g| g.support().iter().fold(0u64, |m, &v| m | 1 << v)).collect();
    let ground = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(Complex::from_predicate(ground, |f| gens.iter().all(|&g| g & !f != 0)))
}

/// `h^i(t) = sum_f c[i][f] * N_f(t)` where `N_0(t) = [t = 0]` and
/// `N_f(t) = binom(-t - 1, f - 1)` counts degree `t` vectors with support
/// exactly some `f`-set and negative entries there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeCohomology {
    pub nvars: usize,
    pub dim: usize,
    pub coefficients: Vec<BTreeMap<usize, BigInt>>,
}

pub fn hochster(i: &MonomialIdeal, k: &FieldSpec) -> Result<SquarefreeCohomology> {
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let delta = stanley_reisner(i)?;
    let dim = delta.faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let mut coefficients = vec![BTreeMap::new(); dim + 1];
    for &f in &delta.faces {
        let size = f.count_ones() as usize;
        for (hd, b) in delta.link(f).reduced_homology(k) {
            let idx = hd + size as i64 + 1;
            *coefficients[idx as usize].entry(size).or_insert_with(BigInt::zero) += b;
        }
    }
    Ok(SquarefreeCohomology { nvars: i.nvars(), dim, coefficients })
}

impl SquarefreeCohomology {
    pub fn h(&self, i: usize, t: i64) -> BigInt {
        let Some(row) = self.coefficients.get(i) else {
            return BigInt::zero();
        };
        row.iter()
            .map(|(&f, c)| {
                if f == 0 {
                    if t == 0 { c.clone() } else { BigInt::zero() }
                } else {
                    c * binom_i(-t - 1, f as i64 - 1)
                }
            })
            .sum()
    }

    pub fn a(&self, i: usize) -> Option<i64> {
        self.coefficients.get(i)?.keys().next().map(|&f| -(f as i64))
    }

    pub fn table(&self, window: (i64, i64)) -> CohomologyTable {
        let (t0, t1) = window;
        CohomologyTable {
            nvars: self.nvars,
            dim: self.dim,
            window,
            h: (0..=self.dim).map(|i| (t0..=t1).map(|t| self.h(i, t)).collect()).collect(),
            a: (0..=self.dim).map(|i| self.a(i)).collect(),
        }
    }
}
