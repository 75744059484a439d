//! Local cohomology of projective monomial curves
//! `S = K[x^{D-b_1} y^{b_1}, ..., x^{D-b_m} y^{b_m}]` with `0` and `D` among
//! the `b_i`, read off the Cech complex on `x^D, y^D`.
//!
//! A lattice point `(a, b)` of degree `t` (`a + b = tD`) in the group of `S`
//! contributes to `H^1` when `b` lies in the numerical semigroup of the
//! `b_i`, `a` lies in that of the `D - b_i`, and `(a, b)` is not in `S`; it
//! contributes to `H^2` when neither membership holds.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};

use super::table::CohomologyTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialCurve {
    pub degree: u32,
    pub b: Vec<u32>,
}

/// Membership in the numerical semigroup generated by `gens`, for values
/// up to `limit`.
fn semigroup_table(gens: &[u32], limit: usize) -> Vec<bool> {
    let mut ok = vec![false; limit + 1];
    ok[0] = true;
    for v in 1..=limit {
        ok[v] = gens.iter().any(|&g| g > 0 && g as usize <= v && ok[v - g as usize]);
    }
    ok
}

impl MonomialCurve {
    pub fn new(degree: u32, mut b: Vec<u32>) -> Result<Self> {
        b.sort_unstable();
        b.dedup();
        if degree == 0 || b.first() != Some(&0) || b.last() != Some(&degree) {
            return Err(Error::InvalidInput("a projective monomial curve needs exponents 0 and D among the b_i".into()));
        }
        Ok(MonomialCurve { degree, b })
    }

    /// `(a, b)` lies in the group generated by the exponent vectors.
    fn in_group(&self, b: i64) -> bool {
        let g = self.b.iter().fold(self.degree, |g, &x| g.gcd(&x)) as i64;
        b.rem_euclid(g) == 0
    }

    /// Second coordinates of `S` in degree `t`: sums of exactly `t` of the `b_i`.
    fn slice(&self, t: usize) -> HashSet<u32> {
        let mut cur: HashSet<u32> = [0].into_iter().collect();
        for _ in 0..t {
            cur = cur.iter().flat_map(|&s| self.b.iter().map(move |&x| s + x)).collect();
        }
        cur
    }

    /// `(h^1(t), h^2(t))`.
    pub fn h(&self, t: i64) -> (u64, u64) {
        let d = self.degree as i64;
        let span = (t.abs() + 2 * d + 2) * d;
        let lo = -span;
        let hi = t * d + span;
        let limit = (hi - lo).max(0) as usize + 1;
        let mirrored: Vec<u32> = self.b.iter().map(|&x| self.degree - x).collect();
        let in_b = semigroup_table(&self.b, limit);
        let in_a = semigroup_table(&mirrored, limit);
        let member = |tab: &[bool], v: i64| v >= 0 && tab[v as usize];
        let slice = if t >= 0 { self.slice(t as usize) } else { HashSet::new() };
        let (mut h1, mut h2) = (0, 0);
        for b in lo..=hi {
            if !self.in_group(b) {
                continue;
            }
            let a = t * d - b;
            match (member(&in_b, b), member(&in_a, a)) {
                (true, true) if !(b >= 0 && slice.contains(&(b as u32))) => h1 += 1,
                (false, false) => h2 += 1,
                _ => {}
            }
        }
        (h1, h2)
    }

    pub fn table(&self, window: (i64, i64)) -> CohomologyTable {
        let (t0, t1) = window;
        let rows: Vec<(u64, u64)> = (t0..=t1).map(|t| self.h(t)).collect();
        let h = vec![
            vec![BigInt::from(0); rows.len()],
            rows.iter().map(|r| BigInt::from(r.0)).collect(),
            rows.iter().map(|r| BigInt::from(r.1)).collect(),
        ];
        CohomologyTable { nvars: self.b.len(), dim: 2, window, h, a: vec![None, self.end(1), self.end(2)] }
    }

    /// Top degree of `H^k`; the regularity is at most `D - 2`, so scanning
    /// up to `D` is enough.
    pub fn end(&self, k: usize) -> Option<i64> {
        (-1..=self.degree as i64).rev().find(|&t| {
            let (h1, h2) = self.h(t);
            if k == 1 { h1 > 0 } else { h2 > 0 }
        })
    }
}
