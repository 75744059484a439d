use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::binom::binom_i;
use crate::error::{Error, Result};

/// Named invariants a bound may read. `reg` is the regularity of `R/I`;
/// the ideal's regularity is `reg + 1`. `index` is the coefficient index
/// `i` for the `|e_i|` bounds, the cohomological index `j` for `A4ii`, and
/// `j` for `F3`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Invariants {
    pub n: Option<u64>,
    pub d: Option<u64>,
    pub c: Option<u64>,
    /// Degrees of a minimal generating set, in any order.
    pub deltas: Option<Vec<u64>>,
    pub e: Option<BigInt>,
    pub adeg: Option<BigInt>,
    pub reg: Option<i64>,
    pub gotzmann_s: Option<BigInt>,
    pub index: Option<u64>,
    pub t: Option<i64>,
    pub m: Option<BigInt>,
    pub alpha: Option<u64>,
    pub beta: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    Reduced,
    DimAtLeast(u64),
    DimAtMost(u64),
    DimEquals(u64),
    MonomialIdeal,
    NoLinearForm,
    DeltaAtLeastTwo,
    InfiniteField,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::Reduced => write!(f, "reduced"),
            Hypothesis::DimAtLeast(k) => write!(f, "dim >= {k}"),
            Hypothesis::DimAtMost(k) => write!(f, "dim <= {k}"),
            Hypothesis::DimEquals(k) => write!(f, "dim = {k}"),
            Hypothesis::MonomialIdeal => write!(f, "monomial"),
            Hypothesis::NoLinearForm => write!(f, "no linear form"),
            Hypothesis::DeltaAtLeastTwo => write!(f, "max generator degree >= 2"),
            Hypothesis::InfiniteField => write!(f, "infinite field"),
        }
    }
}

/// A bound: its hypotheses and the quantity it bounds. The formula itself
/// is [`eval_bound`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundSpec {
    pub name: &'static str,
    pub hypotheses: &'static [Hypothesis],
    pub bounds: &'static str,
}

use Hypothesis::*;

pub const BOUND_SPECS: &[BoundSpec] = &[
    BoundSpec { name: "C4", hypotheses: &[Reduced, DimAtLeast(2)], bounds: "reg I" },
    BoundSpec { name: "C6i", hypotheses: &[Reduced, DimAtLeast(2)], bounds: "reg R/I" },
    BoundSpec { name: "C6ii", hypotheses: &[Reduced, DimAtLeast(2)], bounds: "h^1(t), t >= 0" },
    BoundSpec { name: "C7", hypotheses: &[Reduced, DimEquals(2)], bounds: "reg I" },
    BoundSpec { name: "C2", hypotheses: &[Reduced, DimAtLeast(2)], bounds: "h^1(-1)" },
    BoundSpec { name: "E1", hypotheses: &[DimAtLeast(1), DeltaAtLeastTwo], bounds: "reg I" },
    BoundSpec { name: "E2", hypotheses: &[DimAtMost(1)], bounds: "reg R/I" },
    BoundSpec { name: "E3", hypotheses: &[DimEquals(1)], bounds: "h^0(t), t >= 1" },
    BoundSpec { name: "E5i", hypotheses: &[DimAtLeast(1), DeltaAtLeastTwo], bounds: "reg R/I" },
    BoundSpec { name: "E5ii", hypotheses: &[DimAtLeast(1), DeltaAtLeastTwo], bounds: "h^0(t), t >= 1" },
    BoundSpec { name: "B3", hypotheses: &[InfiniteField, DimAtLeast(2)], bounds: "|e_i|" },
    BoundSpec { name: "B3b", hypotheses: &[DimAtLeast(2)], bounds: "|e_i|" },
    BoundSpec { name: "C10", hypotheses: &[Reduced, DimAtLeast(2)], bounds: "|e_i|" },
    BoundSpec { name: "E7i", hypotheses: &[DimAtLeast(2), DeltaAtLeastTwo], bounds: "|e_1|" },
    BoundSpec { name: "E7ii", hypotheses: &[DimAtLeast(3), DeltaAtLeastTwo], bounds: "|e_i|, i >= 2" },
    BoundSpec { name: "E7", hypotheses: &[DimAtLeast(2), DeltaAtLeastTwo], bounds: "|e_i| (strict)" },
    BoundSpec { name: "B7", hypotheses: &[MonomialIdeal, DimAtLeast(2)], bounds: "|e_i|" },
    BoundSpec { name: "D1", hypotheses: &[], bounds: "H(t), t >= 0" },
    BoundSpec { name: "D2", hypotheses: &[Reduced, NoLinearForm], bounds: "c" },
    BoundSpec { name: "F1", hypotheses: &[], bounds: "reg in(I)" },
    BoundSpec { name: "F3", hypotheses: &[], bounds: "B_j" },
    BoundSpec { name: "F4i", hypotheses: &[DimAtLeast(1), DeltaAtLeastTwo], bounds: "reg in(I)" },
    BoundSpec { name: "F4ii", hypotheses: &[Reduced, DimAtLeast(1), DeltaAtLeastTwo], bounds: "reg in(I)" },
    BoundSpec { name: "A4i", hypotheses: &[DeltaAtLeastTwo], bounds: "h^0(t), t >= 0" },
    BoundSpec { name: "A4ii", hypotheses: &[DeltaAtLeastTwo], bounds: "h^j(t), 1 <= j < d, t <= reg R/I" },
    BoundSpec { name: "A4iii", hypotheses: &[DeltaAtLeastTwo], bounds: "h^d(t), t < reg R/I" },
];

fn canonical(name: &str) -> &str {
    match name {
        "I3" => "B3",
        "I2i" => "F4i",
        "I2ii" => "F4ii",
        other => other,
    }
}

pub fn spec(name: &str) -> Option<&'static BoundSpec> {
    let name = canonical(name);
    BOUND_SPECS.iter().find(|s| s.name == name)
}

/// Results above this many bits are refused rather than computed.
pub const MAX_BOUND_BITS: u64 = 1 << 24;

fn need<T: Clone>(v: &Option<T>, what: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::IncompleteInput(what.into()))
}

fn pow(base: &BigInt, exp: u64) -> Result<BigInt> {
    if base.abs() > BigInt::one() && exp.saturating_mul(base.bits()) > MAX_BOUND_BITS {
        return Err(Error::SizeCap(format!("{base}^{exp} exceeds {MAX_BOUND_BITS} bits")));
    }
    let exp = u32::try_from(exp).map_err(|_| Error::SizeCap(format!("exponent {exp}")))?;
    Ok(num_traits::pow(base.clone(), exp as usize))
}

/// `[2^k]`, the integer part: zero for negative `k`.
fn dyadic(k: i64) -> Result<u64> {
    match k {
        k if k < 0 => Ok(0),
        k if k < 63 => Ok(1 << k),
        _ => Err(Error::SizeCap(format!("2^{k}"))),
    }
}

fn three_halves(x: BigInt) -> BigInt {
    (x * BigInt::from(3)).div_floor(&BigInt::from(2))
}

fn delta(inv: &Invariants) -> Result<BigInt> {
    need(&inv.deltas, "deltas")?
        .into_iter()
        .max()
        .map(BigInt::from)
        .ok_or_else(|| Error::IncompleteInput("deltas of a zero ideal".into()))
}

fn leading_deltas(inv: &Invariants) -> Result<Vec<u64>> {
    let mut ds = need(&inv.deltas, "deltas")?;
    let c = need(&inv.c, "c")? as usize;
    if ds.len() < c {
        return Err(Error::InvalidInput(format!("{} generator degrees for codimension {c}", ds.len())));
    }
    ds.sort_unstable_by(|a, b| b.cmp(a));
    ds.truncate(c);
    Ok(ds)
}

/// `delta_1 * ... * delta_c`.
pub fn pi(inv: &Invariants) -> Result<BigInt> {
    Ok(leading_deltas(inv)?.into_iter().map(BigInt::from).product())
}

/// `delta_1 + ... + delta_c - c`.
pub fn sigma(inv: &Invariants) -> Result<BigInt> {
    let ds = leading_deltas(inv)?;
    Ok(ds.iter().map(|&x| BigInt::from(x) - 1).sum())
}

/// `e(e-1)/2 + adeg`.
fn c_base(inv: &Invariants) -> Result<BigInt> {
    let e = need(&inv.e, "e")?;
    Ok(&e * (&e - 1) / 2 + need(&inv.adeg, "adeg")?)
}

fn d_at_least(inv: &Invariants, k: u64, name: &str) -> Result<u64> {
    let d = need(&inv.d, "d")?;
    if d < k {
        return Err(Error::InvalidInput(format!("{name} is stated for d >= {k}, got d = {d}")));
    }
    Ok(d)
}

fn index_in(inv: &Invariants, lo: u64, name: &str) -> Result<u64> {
    let i = need(&inv.index, "index")?;
    if i < lo {
        return Err(Error::InvalidInput(format!("{name} needs index >= {lo}, got {i}")));
    }
    Ok(i)
}

/// `min{pi, adeg^c}`, using whichever is available.
fn small_b(inv: &Invariants) -> Result<BigInt> {
    let p = pi(inv).ok();
    let a = match (&inv.adeg, inv.c) {
        (Some(a), Some(c)) => Some(pow(a, c)?),
        _ => None,
    };
    match (p, a) {
        (Some(p), Some(a)) => Ok(p.min(a)),
        (Some(x), None) | (None, Some(x)) => Ok(x),
        (None, None) => Err(Error::IncompleteInput("deltas or adeg".into())),
    }
}

/// `(3 Delta^c + 2 Delta)` and the power of two dividing it out.
fn m_f4(inv: &Invariants) -> Result<BigInt> {
    let dl = delta(inv)?;
    Ok(pow(&dl, need(&inv.c, "c")?)? * 3 + &dl * 2)
}

/// `pi + Delta - 1`.
fn q_e(inv: &Invariants) -> Result<BigInt> {
    Ok(pi(inv)? + delta(inv)? - 1)
}

/// The largest value the bounded quantity may take: the bound itself,
/// rounded down where a rational factor appears, or the largest integer
/// strictly below it for strict bounds.
pub fn eval_bound(name: &str, inv: &Invariants) -> Result<BigInt> {
    let name = canonical(name);
    match name {
        "C4" => {
            let d = d_at_least(inv, 2, name)?;
            pow(&c_base(inv)?, dyadic(d as i64 - 2)?)
        }
        "C6i" => {
            let d = d_at_least(inv, 2, name)?;
            Ok(pow(&c_base(inv)?, dyadic(d as i64 - 2)?)? - 1)
        }
        "C6ii" => {
            let d = d_at_least(inv, 2, name)? as i64;
            let m = c_base(inv)?;
            Ok(pow(&m, dyadic(d - 2)?)? - need(&inv.e, "e")? * pow(&m, dyadic(d - 3)?)?)
        }
        "C7" => need(&inv.adeg, "adeg"),
        "C2" => Ok(need(&inv.adeg, "adeg")? - need(&inv.e, "e")?),
        "E1" => {
            let d = d_at_least(inv, 1, name)?;
            pow(&q_e(inv)?, dyadic(d as i64 - 1)?)
        }
        "E2" => Ok(sigma(inv)? + delta(inv)? - 1),
        "E3" => Ok(pi(inv)? - 1),
        "E5i" => {
            let d = d_at_least(inv, 1, name)?;
            Ok(pow(&q_e(inv)?, dyadic(d as i64 - 1)?)? - 1)
        }
        "E5ii" => {
            let d = d_at_least(inv, 1, name)? as i64;
            let q = q_e(inv)?;
            Ok(pow(&q, dyadic(d - 1)?)? - pow(&q, dyadic(d - 2)?)?)
        }
        "B3" | "B3b" => {
            let i = index_in(inv, 1, name)?;
            let factor = if name == "B3" { pow(&need(&inv.adeg, "adeg")?, need(&inv.c, "c")?)? } else { pi(inv)? };
            let r = BigInt::from(need(&inv.reg, "reg")? + 1);
            Ok(if i == 1 { factor * r } else { three_halves(factor * pow(&r, i)?) })
        }
        "C10" => {
            let i = index_in(inv, 1, name)?;
            let a = pow(&need(&inv.adeg, "adeg")?, need(&inv.c, "c")?)?;
            let m = c_base(inv)?;
            Ok(if i == 1 { a * m } else { three_halves(a * pow(&m, i * dyadic(i as i64 - 1)?)?) })
        }
        "E7i" => Ok(pi(inv)? * pow(&q_e(inv)?, 2)?),
        "E7ii" => {
            let i = index_in(inv, 2, name)?;
            Ok(three_halves(pi(inv)? * pow(&q_e(inv)?, i * dyadic(i as i64)?)?))
        }
        "E7" => {
            let i = index_in(inv, 1, name)?;
            let k = 1 + i * dyadic(i as i64)?;
            Ok((pow(&m_f4(inv)?, k)? - BigInt::one()).div_floor(&pow(&BigInt::from(2), k)?))
        }
        "B7" => {
            let i = index_in(inv, 1, name)?;
            let c = need(&inv.c, "c")?;
            let a = pow(&need(&inv.adeg, "adeg")?, c + i)?;
            let b = pow(&BigInt::from(need(&inv.n, "n")?), i)? * pow(&delta(inv)?, c + i)?;
            Ok(three_halves(a.min(b)))
        }
        "D1" => {
            let d = need(&inv.d, "d")? as i64;
            let t = need(&inv.t, "t")?;
            if t < 0 {
                return Err(Error::InvalidInput("D1 is stated for t >= 0".into()));
            }
            Ok((small_b(inv)? - 1) * binom_i(t + d - 2, d - 1) + binom_i(t + d - 1, d - 1))
        }
        "D2" => Ok(BigInt::from(need(&inv.d, "d")?) * (need(&inv.adeg, "adeg")? - 1)),
        "F1" => Ok(BigInt::from(need(&inv.reg, "reg")? + 1).max(need(&inv.gotzmann_s, "gotzmann_s")?)),
        "F3" => {
            let m = need(&inv.m, "m")?;
            let (a, b) = (need(&inv.alpha, "alpha")?, need(&inv.beta, "beta")?);
            let j = need(&inv.index, "index")?;
            if m < BigInt::from(2) || a < 1 || b < 1 {
                return Err(Error::InvalidInput("F3 needs M >= 2 and alpha, beta >= 1".into()));
            }
            pow(&m, (a + j * b) * dyadic(j as i64)?)
        }
        "F4i" => {
            let d = d_at_least(inv, 1, name)?;
            let k = d * dyadic(d as i64 - 1)?;
            Ok(pow(&m_f4(inv)?, k)?.div_floor(&pow(&BigInt::from(2), k)?))
        }
        "F4ii" => {
            let d = d_at_least(inv, 1, name)?;
            let n = need(&inv.n, "n")?;
            pow(&need(&inv.adeg, "adeg")?, n.saturating_sub(1) * dyadic(d as i64 - 1)?)
        }
        "A4i" => {
            let d = need(&inv.d, "d")? as i64;
            let t = need(&inv.t, "t")?;
            if t < 0 {
                return Err(Error::InvalidInput("A4i is stated for t >= 0".into()));
            }
            Ok((small_b(inv)? - 1) * binom_i(t + d - 2, d - 1))
        }
        "A4ii" => {
            let d = need(&inv.d, "d")? as i64;
            let j = need(&inv.index, "index")? as i64;
            let (t, r) = (need(&inv.t, "t")?, need(&inv.reg, "reg")?);
            if j < 1 || j >= d || t > r {
                return Err(Error::InvalidInput("A4ii is stated for 1 <= j < d and t <= reg".into()));
            }
            Ok((small_b(inv)? - 1) * binom_i(r + d - j - 2, d - j - 1) * binom_i(r - t, j))
        }
        "A4iii" => {
            let d = need(&inv.d, "d")? as i64;
            let (t, r) = (need(&inv.t, "t")?, need(&inv.reg, "reg")?);
            if t >= r {
                return Err(Error::InvalidInput("A4iii is stated for t < reg".into()));
            }
            Ok(need(&inv.e, "e")? * binom_i(r - t - 1, d - 1))
        }
        _ => Err(Error::InvalidInput(format!("unknown bound {name}"))),
    }
}

/// `|e_i| <= M^{alpha + i beta 2^i}` for all `i`, the premise of `F3`.
pub fn f3_premise(e: &[BigInt], m: &BigInt, alpha: u64, beta: u64) -> Result<bool> {
    for (i, ei) in e.iter().enumerate() {
        let i = i as u64;
        if ei.abs() > pow(m, alpha + i * beta * dyadic(i as i64)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ceil((3/2) Delta^c + Delta)`, the base used for `F4i` through `F3`.
pub fn f4_base(inv: &Invariants) -> Result<BigInt> {
    let x = m_f4(inv)?;
    Ok(x.div_ceil(&BigInt::from(2)))
}
