use crate::error::{Error, Result};
use crate::groebner::{m_saturate, IdealHandle};
use crate::hilbert::series;
use crate::ring::{derive_seed, LinearChange, Polynomial, TermOrder};

/// Krull dimension of `R/I`.
pub fn krull_dim(i: &IdealHandle) -> Result<usize> {
    Ok(series(&i.initial_ideal(&TermOrder::GrevLex)?).dim)
}

/// `((I, x_n) : m^inf)` after a seeded generic change, read in `x_1..x_{n-1}`.
pub fn hyperplane_section(i: &IdealHandle, seed: u64) -> Result<IdealHandle> {
    let ring = i.ring();
    let n = ring.nvars;
    if n == 0 || i.is_unit()? || krull_dim(i)? == 0 {
        return Err(Error::Hypothesis("a hyperplane section needs dim R/I >= 1".into()));
    }
    let moved = if i.is_zero() { i.clone() } else { i.apply(&LinearChange::random(ring, seed))? };
    let target = ring.with_nvars(n - 1);
    let mut images: Vec<Polynomial> = (0..n - 1).map(|v| Polynomial::var(target, v)).collect();
    images.push(Polynomial::zero(target));
    let gens = moved
        .generators()
        .iter()
        .map(|g| g.substitute(&images, target))
        .collect::<Result<Vec<_>>>()?;
    let cut = IdealHandle::new(target, gens)?.with_options(i.options().clone());
    m_saturate(&cut, derive_seed(seed, 1))
}
