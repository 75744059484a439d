use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::binom::{binom_u64, macaulay_bound};
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::monomial::MonomialIdeal;
use crate::ring::{monomials_of_degree, TermOrder};

use super::{gotzmann, series, HilbertSeries};

/// Largest number of monomials enumerated in one degree.
pub const LEX_MONOMIAL_CAP: u64 = 2_000_000;

/// `H(0..=t_max)` with the postulation index when known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunctionTable {
    pub nvars: usize,
    pub values: Vec<BigInt>,
    pub postulation_index: Option<u64>,
}

impl HilbertFunctionTable {
    pub fn from_series(s: &HilbertSeries, t_max: u64) -> Self {
        HilbertFunctionTable { nvars: s.nvars, values: s.values(t_max), postulation_index: Some(s.postulation_index()) }
    }
}

/// Checks `H(0) = 1`, `H(t) <= binom(n+t-1, t)` and `H(t+1) <= H(t)^<t>`.
pub fn check_macaulay(nvars: usize, values: &[BigInt]) -> Result<()> {
    if values.iter().all(|v| v.is_zero()) {
        return Ok(());
    }
    if values.first().is_some_and(|v| *v != BigInt::from(1)) {
        return Err(Error::NotHilbertFunction("H(0) must be 1".into()));
    }
    for (t, v) in values.iter().enumerate() {
        if v < &BigInt::zero() {
            return Err(Error::NotHilbertFunction(format!("H({t}) is negative")));
        }
        let full = BigInt::from(binom_u64((nvars + t) as u64 - 1, t as u64));
        if nvars == 0 && t > 0 && !v.is_zero() || nvars > 0 && v > &full {
            return Err(Error::NotHilbertFunction(format!("H({t}) = {v} exceeds the number of monomials")));
        }
        if t >= 1 && t + 1 < values.len() {
            let bound = macaulay_bound(v, t as u64);
            if values[t + 1] > bound {
                return Err(Error::NotHilbertFunction(format!("H({}) = {} exceeds H({t})^<{t}> = {bound}", t + 1, values[t + 1])));
            }
        }
    }
    Ok(())
}

/// The lex-segment ideal whose degree-`m` part is spanned by the first
/// `dim R_m - H(m)` monomials in lex order, for `m` in the window.
pub fn lex_segment(nvars: usize, values: &[BigInt]) -> Result<MonomialIdeal> {
    check_macaulay(nvars, values)?;
    let mut gens = Vec::new();
    for (m, v) in values.iter().enumerate() {
        let total = binom_u64((nvars + m) as u64 - 1, m as u64);
        if total > LEX_MONOMIAL_CAP {
            return Err(Error::SizeCap(format!("{total} monomials of degree {m}")));
        }
        let k = total - v.to_u64().expect("bounded by the monomial count");
        if k == 0 {
            continue;
        }
        gens.extend(monomials_of_degree(nvars, m as u32).into_iter().take(k as usize));
    }
    Ok(MonomialIdeal::new(nvars, gens))
}

/// Lex-segment ideal with the Hilbert function of `R/I`.
///
/// Generators live in degrees up to `max(s, postulation index)`, `s` the
/// Gotzmann number; the result is checked to reproduce the series.
pub fn lex_segment_of_ideal(i: &IdealHandle) -> Result<MonomialIdeal> {
    let s = series(&i.initial_ideal(&TermOrder::GrevLex)?);
    lex_segment_of_series(&s)
}

pub fn lex_segment_of_series(s: &HilbertSeries) -> Result<MonomialIdeal> {
    let n = s.nvars;
    if s.is_zero() {
        return Ok(MonomialIdeal::unit(n));
    }
    let got = if s.dim > 0 { gotzmann(&s.polynomial())?.s() } else { BigInt::zero() };
    let top = got
        .to_u64()
        .filter(|g| *g < 10_000)
        .ok_or_else(|| Error::SizeCap(format!("Gotzmann number {got} is too large to enumerate")))?
        .max(s.postulation_index())
        .max(1);
    let lex = lex_segment(n, &s.values(top))?;
    let back = series(&lex);
    if back.h != s.h || back.dim != s.dim {
        return Err(Error::NotHilbertFunction("internal: lex segment does not reproduce the series".into()));
    }
    Ok(lex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Monomial;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn zero_and_square() {
        assert!(lex_segment(2, &ints(&[1, 2, 3, 4])).unwrap().is_zero());
        let sq = MonomialIdeal::new(2, vec![Monomial::new(vec![2, 0])]);
        let l = lex_segment_of_series(&series(&sq)).unwrap();
        assert_eq!(l, sq);
    }

    #[test]
    fn growth_violation() {
        // 1, 2, 1, 2 fails: 1^<2> = 1.
        assert_eq!(lex_segment(2, &ints(&[1, 2, 1, 2])).unwrap_err().code(), "E_NOT_HILBERT_FN");
        assert!(check_macaulay(2, &ints(&[2])).is_err());
    }

    #[test]
    fn twisted_cubic_lex_ideal() {
        // Hilbert function 3t + 1 in four variables.
        let i = MonomialIdeal::from_exponents(
            4,
            &[vec![2, 0, 0, 0], vec![1, 1, 0, 0], vec![0, 2, 0, 0]],
        )
        .unwrap();
        let s = series(&i);
        assert_eq!(s.polynomial().e, ints(&[3, 2]));
        let l = lex_segment_of_series(&s).unwrap();
        assert!(l.is_strongly_stable());
        assert_eq!(l.max_degree(), 4);
        assert_eq!(series(&l).h, s.h);
    }
}
