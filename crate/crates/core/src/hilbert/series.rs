use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::binom::binom_i;
use crate::error::Result;
use crate::groebner::IdealHandle;
use crate::monomial::MonomialIdeal;
use crate::ring::{Monomial, TermOrder};

use super::HilbertPolynomial;

/// `H(z) = numerator / (1 - z)^n = h / (1 - z)^d` with `h(1) != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub nvars: usize,
    /// Coefficients of `z^0, z^1, ...` over `(1 - z)^n`.
    pub numerator: Vec<BigInt>,
    /// Reduced numerator over `(1 - z)^dim`.
    pub h: Vec<BigInt>,
    pub dim: usize,
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        v.push(BigInt::zero());
    }
    v
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_shifted(acc: &mut Vec<BigInt>, p: &[BigInt], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::zero());
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

/// `prod (1 - z^{deg g})` for pairwise coprime generators.
fn coprime_numerator(gens: &[Monomial]) -> Vec<BigInt> {
    let mut acc = vec![BigInt::one()];
    for g in gens {
        let d = g.degree() as usize;
        let mut f = vec![BigInt::zero(); d + 1];
        f[0] = BigInt::one();
        f[d] -= BigInt::one();
        acc = poly_mul(&acc, &f);
    }
    acc
}

/// Splits the generators into groups with pairwise disjoint supports.
fn components(gens: &[Monomial]) -> Vec<Vec<Monomial>> {
    let mut groups: Vec<(u64, Vec<Monomial>)> = Vec::new();
    for g in gens {
        let mask = g.support().iter().fold(0u64, |m, &v| m | 1 << (v % 64));
        let (hit, miss): (Vec<_>, Vec<_>) = groups.into_iter().partition(|(m, _)| m & mask != 0);
        let mut merged = (mask, vec![g.clone()]);
        for (m, v) in hit {
            merged.0 |= m;
            merged.1.extend(v);
        }
        groups = miss;
        groups.push(merged);
    }
    groups.into_iter().map(|(_, v)| v).collect()
}

fn numerator_rec(i: &MonomialIdeal) -> Vec<BigInt> {
    let gens = i.generators();
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![BigInt::zero()];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(k, a)| gens[k + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return coprime_numerator(gens);
    }
    let comps = components(gens);
    if comps.len() > 1 {
        return comps
            .into_iter()
            .map(|c| numerator_rec(&MonomialIdeal::new(i.nvars(), c)))
            .fold(vec![BigInt::one()], |acc, p| poly_mul(&acc, &p));
    }
    // Pivot: the variable in most non-pure generators, to the smallest
    // exponent it has there (never a member of I).
    let n = i.nvars();
    let mut count = vec![0usize; n];
    for g in gens.iter().filter(|g| g.support().len() > 1) {
        for v in g.support() {
            count[v] += 1;
        }
    }
    let v = (0..n).max_by_key(|&v| (count[v], std::cmp::Reverse(v))).unwrap();
    let k = gens
        .iter()
        .filter(|g| g.support().len() > 1 && g.exps()[v] > 0)
        .map(|g| g.exps()[v])
        .min()
        .unwrap();
    let pivot = Monomial::var_power(n, v, k);
    let plus = i.sum(&MonomialIdeal::new(n, vec![pivot.clone()])).unwrap();
    let colon = i.colon_monomial(&pivot);
    let mut acc = numerator_rec(&plus);
    add_shifted(&mut acc, &numerator_rec(&colon), k as usize);
    trim(acc)
}

/// Hilbert series of `R/I` by pivot recursion.
pub fn series(i: &MonomialIdeal) -> HilbertSeries {
    let numerator = trim(numerator_rec(i));
    let mut h = numerator.clone();
    let mut dim = i.nvars();
    // Divide out (1 - z) while h(1) = 0.
    while dim > 0 && !h.iter().all(|c| c.is_zero()) && h.iter().sum::<BigInt>().is_zero() {
        let mut q = vec![BigInt::zero(); h.len() - 1];
        let mut run = BigInt::zero();
        for (j, c) in h.iter().enumerate().take(h.len() - 1) {
            run += c;
            q[j] = run.clone();
        }
        h = trim(q);
        dim -= 1;
    }
    HilbertSeries { nvars: i.nvars(), numerator, h, dim }
}

/// Series of `R/in(I)`, equal to that of `R/I`.
pub fn hilbert_of_ideal(i: &IdealHandle, order: &TermOrder) -> Result<HilbertSeries> {
    Ok(series(&i.initial_ideal(order)?))
}

impl HilbertSeries {
    pub fn is_zero(&self) -> bool {
        self.h.iter().all(|c| c.is_zero())
    }

    /// Multiplicity `h(1)`.
    pub fn degree(&self) -> BigInt {
        self.h.iter().sum()
    }

    /// `H(t)` for `t >= 0`.
    pub fn value(&self, t: u64) -> BigInt {
        if self.dim == 0 {
            return self.h.get(t as usize).cloned().unwrap_or_default();
        }
        let d = self.dim as i64;
        self.h
            .iter()
            .enumerate()
            .take_while(|(j, _)| *j as u64 <= t)
            .map(|(j, c)| c * binom_i(t as i64 - j as i64 + d - 1, d - 1))
            .sum()
    }

    pub fn values(&self, upto: u64) -> Vec<BigInt> {
        (0..=upto).map(|t| self.value(t)).collect()
    }

    /// `e_i = sum_j binom(j, i) h_j`, `i < dim`.
    pub fn polynomial(&self) -> HilbertPolynomial {
        let e = (0..self.dim as i64)
            .map(|i| self.h.iter().enumerate().map(|(j, c)| c * binom_i(j as i64, i)).sum())
            .collect();
        HilbertPolynomial::new(self.dim, e)
    }

    /// `deg h - dim`: `H(t) = P(t)` for all `t > a`.
    pub fn a_invariant(&self) -> i64 {
        (self.h.len() as i64 - 1) - self.dim as i64
    }

    /// Least `t0 >= 0` with `H(t) = P(t)` for all `t >= t0`.
    pub fn postulation_index(&self) -> u64 {
        let p = self.polynomial();
        let mut t0 = (self.a_invariant() + 1).max(0) as u64;
        while t0 > 0 && self.value(t0 - 1) == p.eval_i64(t0 as i64 - 1) {
            t0 -= 1;
        }
        t0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Count standard monomials degree by degree.
    fn count(i: &MonomialIdeal, t: u32) -> BigInt {
        BigInt::from(crate::ring::monomials_of_degree(i.nvars(), t).iter().filter(|m| !i.contains(m)).count())
    }

    #[test]
    fn zero_ideal_plane() {
        let s = series(&MonomialIdeal::zero(2));
        assert_eq!((s.dim, s.h.clone()), (2, ints(&[1])));
        let p = s.polynomial();
        assert_eq!(p.e, ints(&[1, 0]));
        assert_eq!(p.eval_i64(5), BigInt::from(6));
    }

    #[test]
    fn embedded_point() {
        let i = mi(2, &[&[2, 0], &[1, 1]]);
        let s = series(&i);
        assert_eq!(s.numerator, ints(&[1, 0, -2, 1]));
        assert_eq!(s.values(4), ints(&[1, 2, 1, 1, 1]));
        assert_eq!(s.polynomial().e, ints(&[1]));
        assert_eq!(s.postulation_index(), 2);
    }

    #[test]
    fn four_variable_example() {
        let p = MonomialIdeal::prime(4, &[0, 1]);
        let q = mi(4, &[&[3, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 2, 0]]);
        let i = p.intersect(&q).unwrap();
        let s = series(&i);
        for t in 0..10 {
            assert_eq!(s.value(t), count(&i, t as u32));
        }
        let hp = s.polynomial();
        assert_eq!(hp.e, ints(&[1, -16]));
        assert_eq!(hp.eval_i64(0), BigInt::from(17));
    }

    #[test]
    fn artinian() {
        let i = mi(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let s = series(&i);
        assert_eq!((s.dim, s.degree()), (0, BigInt::from(4)));
        assert_eq!(s.values(3), ints(&[1, 2, 1, 0]));
        assert!(s.polynomial().e.is_empty());
    }

    #[test]
    fn unit_ideal_is_empty_series() {
        let s = series(&MonomialIdeal::unit(3));
        assert!(s.is_zero());
        assert_eq!(s.value(0), BigInt::zero());
    }
}
