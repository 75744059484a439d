use crate::error::{Error, Result};
use crate::groebner::{GbOptions, GroebnerBasis, IdealHandle};
use crate::ring::{FieldSpec, Monomial, Polynomial, Ring, TermOrder};

/// Equal-degree exponent vectors, homogenizing with one extra parameter
/// and one extra target (placed first) when the degrees differ.
fn homogenized(exponents: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let deg = |v: &Vec<u32>| v.iter().sum::<u32>();
    let top = exponents.iter().map(deg).max().unwrap_or(0);
    if exponents.iter().all(|v| deg(v) == top) {
        return exponents.to_vec();
    }
    let mut out = vec![std::iter::once(top).chain(std::iter::repeat_n(0, exponents[0].len())).collect()];
    out.extend(exponents.iter().map(|v| std::iter::once(top - deg(v)).chain(v.iter().copied()).collect()));
    out
}

/// Kernel of `K[a_1..a_m] -> K[u_1..u_k]`, `a_i -> u^{v_i}`, by eliminating
/// the parameters from `a_i - u^{v_i}`. Parametrizations of mixed degree
/// are homogenized first, which yields the projective closure in `m + 1`
/// variables.
pub fn toric_ideal(exponents: &[Vec<u32>], field: FieldSpec, opts: &GbOptions) -> Result<IdealHandle> {
    let k = exponents.first().map_or(0, |v| v.len());
    if exponents.is_empty() || k == 0 || exponents.iter().any(|v| v.len() != k) {
        return Err(Error::InvalidInput("exponent vectors must be non-empty and of equal length".into()));
    }
    if exponents.iter().any(|v| v.iter().all(|&e| e == 0)) {
        return Err(Error::InvalidInput("constant monomial in the parametrization".into()));
    }
    let vecs = homogenized(exponents);
    let k = vecs[0].len();
    let m = vecs.len();
    if k > 4 || m > 7 {
        return Err(Error::SizeCap(format!("{k} parameters and {m} targets exceed the desk-scale cap")));
    }
    let big = Ring::new(k + m, field);
    let gens: Vec<Polynomial> = vecs
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut u = v.clone();
            u.resize(k + m, 0);
            Polynomial::var(big, k + i).sub(&Polynomial::from_monomial(big, Monomial::new(u)))
        })
        .collect::<Result<_>>()?;
    let gb = GroebnerBasis::compute(big, &gens, &TermOrder::Block(k), opts)?;
    let target = Ring::new(m, field);
    let kept: Vec<Polynomial> = gb
        .generators()
        .iter()
        .filter(|g| g.terms().all(|(mono, _)| mono.exps()[..k].iter().all(|&e| e == 0)))
        .map(|g| {
            Polynomial::from_terms(target, g.terms().map(|(mono, c)| (Monomial::new(mono.exps()[k..].to_vec()), c.clone())))
        })
        .collect::<Result<_>>()?;
    Ok(IdealHandle::new(target, kept)?.with_options(opts.clone()))
}
