use num_bigint::BigInt;

use crate::binom::binom_u64;
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::linalg;
use crate::ring::monomials_of_degree;

/// Cap on the number of degree-`t` monomials for the rank oracle.
pub const BRUTE_FORCE_CAP: u64 = 100_000;

/// `dim_K (R/I)_t` by row-reducing the span of all `m * g` in degree `t`,
/// independent of any Groebner basis.
pub fn brute_force_hilbert(i: &IdealHandle, t: u64) -> Result<BigInt> {
    let n = i.ring().nvars;
    let total = if n == 0 { u64::from(t == 0) } else { binom_u64(n as u64 + t - 1, t) };
    if total > BRUTE_FORCE_CAP {
        return Err(Error::SizeCap(format!("{total} monomials in degree {t}")));
    }
    let mons = monomials_of_degree(n, t as u32);
    let index: std::collections::HashMap<_, _> = mons.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
    let field = i.ring().field;
    let mut rows = Vec::new();
    for g in i.generators() {
        let Some(dg) = g.total_degree() else { continue };
        if dg > t {
            continue;
        }
        for m in monomials_of_degree(n, (t - dg) as u32) {
            let mut row = vec![field.zero(); mons.len()];
            for (gm, c) in g.terms() {
                row[index[&gm.mul_unchecked(&m)]] = c.clone();
            }
            rows.push(row);
        }
    }
    let rank = linalg::rank(&field, rows);
    Ok(BigInt::from(mons.len() - rank))
}
