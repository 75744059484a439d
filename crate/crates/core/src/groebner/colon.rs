use crate::error::{Error, Result};
use crate::ring::{derive_seed, LinearChange, Monomial, Polynomial, Ring, TermOrder};

use super::{GbOptions, GroebnerBasis, IdealHandle};

/// Colon by one element or saturation by its powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColonMode {
    Colon,
    Saturation,
}

/// Prepend a tag variable with exponent `w`.
fn lift(f: &Polynomial, big: Ring, w: u32) -> Polynomial {
    Polynomial::from_terms(
        big,
        f.terms().map(|(m, c)| {
            let mut e = Vec::with_capacity(m.nvars() + 1);
            e.push(w);
            e.extend_from_slice(m.exps());
            (Monomial::new(e), c.clone())
        }),
    )
    .expect("lifted terms fit")
}

fn drop_tag(f: &Polynomial, small: Ring) -> Polynomial {
    Polynomial::from_terms(small, f.terms().map(|(m, c)| (Monomial::new(m.exps()[1..].to_vec()), c.clone())))
        .expect("tag-free terms fit")
}

/// Generators of `(A) ∩ (B)` by eliminating `w` from `w A + (1 - w) B`.
pub(crate) fn intersect_gens(ring: Ring, a: &[Polynomial], b: &[Polynomial], opts: &GbOptions) -> Result<Vec<Polynomial>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let big = ring.with_nvars(ring.nvars + 1);
    let mut gens: Vec<Polynomial> = a.iter().map(|f| lift(f, big, 1)).collect();
    for f in b {
        gens.push(lift(f, big, 0).sub(&lift(f, big, 1))?);
    }
    let gb = GroebnerBasis::compute(big, &gens, &TermOrder::Block(1), opts)?;
    Ok(gb
        .generators()
        .iter()
        .filter(|g| g.terms().all(|(m, _)| m.exps()[0] == 0))
        .map(|g| drop_tag(g, ring))
        .collect())
}

/// `f / g` when `g` divides `f`.
pub fn divide_exact(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let order = TermOrder::GrevLex;
    let field = f.field();
    let (gm, gc) = g.leading(&order).map(|(m, c)| (m.clone(), c.clone()))?;
    let mut q = Polynomial::zero(f.ring());
    let mut r = f.clone();
    while let Some((rm, rc)) = r.leading(&order).map(|(m, c)| (m.clone(), c.clone())) {
        let m = gm.quotient_of(&rm)?;
        let c = field.div(&rc, &gc)?;
        let t = Polynomial::term(f.ring(), m, c);
        r = r.sub(&t.mul(g).ok()?).ok()?;
        q = q.add(&t).ok()?;
    }
    Some(q)
}

/// `I ∩ J`.
pub fn intersect(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    if i.ring() != j.ring() {
        return Err(Error::RingMismatch("intersecting ideals of different rings".into()));
    }
    if let (Some(a), Some(b)) = (i.as_monomial(), j.as_monomial()) {
        return IdealHandle::from_monomial(i.ring(), &a.intersect(&b)?).map(|h| h.with_options(i.options().clone()));
    }
    let gens = intersect_gens(i.ring(), i.generators(), j.generators(), i.options())?;
    i.derived(i.ring(), gens)
}

fn colon_once(i: &IdealHandle, f: &Polynomial) -> Result<IdealHandle> {
    let gens = intersect_gens(i.ring(), i.generators(), std::slice::from_ref(f), i.options())?;
    let quotients = gens
        .iter()
        .map(|g| divide_exact(g, f).ok_or_else(|| Error::InvalidInput("internal: inexact colon quotient".into())))
        .collect::<Result<Vec<_>>>()?;
    i.derived(i.ring(), quotients)
}

/// `I : f` or `I : f^inf`; saturation stops when two consecutive reduced
/// bases agree.
pub fn colon_and_saturate(i: &IdealHandle, f: &Polynomial, mode: ColonMode) -> Result<IdealHandle> {
    if f.ring() != i.ring() {
        return Err(Error::RingMismatch("colon by a polynomial of another ring".into()));
    }
    if f.is_zero() || !f.is_homogeneous() {
        return Err(Error::InvalidInput("colon needs a non-zero homogeneous polynomial".into()));
    }
    let mut cur = colon_once(i, f)?;
    if mode == ColonMode::Colon {
        return Ok(cur);
    }
    let mut prev = i.clone();
    while !cur.same_ideal(&prev)? {
        prev = cur;
        cur = colon_once(&prev, f)?;
    }
    Ok(cur)
}

/// `I : x_n^inf` from a grevlex basis by striking powers of the last variable.
pub fn saturate_last_variable(i: &IdealHandle) -> Result<IdealHandle> {
    let n = i.ring().nvars;
    if n == 0 {
        return Ok(i.clone());
    }
    let gb = i.gb(&TermOrder::GrevLex)?;
    let gens = gb
        .generators()
        .iter()
        .map(|g| {
            let k = g.terms().map(|(m, _)| m.exps()[n - 1]).min().unwrap_or(0);
            let terms = g.terms().map(|(m, c)| (m.with_exp(n - 1, m.exps()[n - 1] - k), c.clone()));
            Polynomial::from_terms(i.ring(), terms).expect("same ring")
        })
        .collect();
    i.derived(i.ring(), gens)
}

/// Attempts before giving up on certifying a saturation.
pub const SATURATION_ATTEMPTS: u64 = 6;

/// `l` is a non-zerodivisor modulo `I`, where `l` is the form that the
/// seeded change turns into `x_n`: in grevlex no leading monomial of the
/// moved ideal may involve `x_n`.
fn last_variable_regular(i: &IdealHandle, seed: u64) -> Result<bool> {
    let n = i.ring().nvars;
    let moved = i.apply(&LinearChange::random(i.ring(), seed))?;
    Ok(moved.gb(&TermOrder::GrevLex)?.leading_monomials().iter().all(|m| m.exps()[n - 1] == 0))
}

/// `I : m^inf`.
///
/// General ideals go through `I : l^inf` for a seeded random linear form `l`
/// (a random change of coordinates followed by the last-variable trick),
/// certified by `(J : l') = J` for two further random forms `l'`.
pub fn m_saturate(i: &IdealHandle, seed: u64) -> Result<IdealHandle> {
    if let Some(mi) = i.as_monomial() {
        return IdealHandle::from_monomial(i.ring(), &mi.m_saturate()).map(|h| h.with_options(i.options().clone()));
    }
    let ring = i.ring();
    for attempt in 0..SATURATION_ATTEMPTS {
        let s = derive_seed(seed, attempt);
        let change = LinearChange::random(ring, s);
        let sat = saturate_last_variable(&i.apply(&change)?)?;
        if sat.is_unit()? {
            return i.derived(ring, vec![Polynomial::one(ring)]);
        }
        let cand = sat.apply(&change.inverse())?;
        let mut ok = true;
        for k in 0..2 {
            if !last_variable_regular(&cand, derive_seed(s, 100 + k))? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(cand);
        }
    }
    Err(Error::Genericity(format!("saturation not certified after {SATURATION_ATTEMPTS} attempts")))
}
