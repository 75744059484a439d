//! Coefficient back ends and the term-sorted polynomial rows the
//! Buchberger loop works on.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{Coeff, FieldSpec, Monomial, Polynomial, Ring, TermOrder};

/// Terms in strictly decreasing order under the active term order.
pub(crate) type Row<C> = Vec<(Monomial, C)>;

pub(crate) trait Arith: Sync {
    type C: Clone + PartialEq + std::fmt::Debug + Send + Sync;

    fn is_zero(&self, a: &Self::C) -> bool;
    fn mul(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn sub(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn is_one(&self, a: &Self::C) -> bool;
    /// Multipliers `(s, t)` with `s * a = t * b`.
    fn cancel(&self, a: &Self::C, b: &Self::C) -> (Self::C, Self::C);
    /// Scale to the canonical associate (monic, or primitive with positive lead).
    fn normalize(&self, p: &mut Row<Self::C>);
    /// Reduction may multiply the partial remainder by a unit; back ends
    /// over a field never do, the integer back end does.
    const SCALES: bool;

    fn from_poly(&self, f: &Polynomial, order: &TermOrder) -> Row<Self::C>;
    fn to_poly(&self, row: &Row<Self::C>, ring: Ring) -> Polynomial;
}

/// Fraction-free arithmetic for Q: rows are primitive integer polynomials.
pub(crate) struct IntArith;

impl Arith for IntArith {
    type C = BigInt;
    const SCALES: bool = true;

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }
    fn cancel(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        let g = a.gcd(b);
        let (mut s, mut t) = (b / &g, a / &g);
        if s.is_negative() {
            s = -s;
            t = -t;
        }
        (s, t)
    }
    fn normalize(&self, p: &mut Row<BigInt>) {
        let Some(first) = p.first() else { return };
        let mut g = first.1.abs();
        for (_, c) in p.iter().skip(1) {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if first.1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in p.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
    fn from_poly(&self, f: &Polynomial, order: &TermOrder) -> Row<BigInt> {
        let terms = f.sorted_terms(order);
        let mut den = BigInt::one();
        for (_, c) in &terms {
            if let Coeff::Rat(r) = c {
                den = den.lcm(r.denom());
            }
        }
        let mut row: Row<BigInt> = terms
            .into_iter()
            .map(|(m, c)| match c {
                Coeff::Rat(r) => (m, r.numer() * (&den / r.denom())),
                Coeff::Mod(_) => panic!("integer back end fed a prime-field polynomial"),
            })
            .collect();
        self.normalize(&mut row);
        row
    }
    fn to_poly(&self, row: &Row<BigInt>, ring: Ring) -> Polynomial {
        let lead = row.first().map(|t| t.1.clone()).unwrap_or_else(BigInt::one);
        Polynomial::from_terms(
            ring,
            row.iter().map(|(m, c)| (m.clone(), Coeff::Rat(BigRational::new(c.clone(), lead.clone())))),
        )
        .expect("row lives in the ring")
    }
}

/// Field arithmetic over Q, used where exact remainders matter.
pub(crate) struct RatArith;

impl Arith for RatArith {
    type C = BigRational;
    const SCALES: bool = false;

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn cancel(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        (BigRational::one(), a / b)
    }
    fn normalize(&self, p: &mut Row<BigRational>) {
        let Some(first) = p.first() else { return };
        if first.1.is_one() {
            return;
        }
        let inv = first.1.recip();
        for (_, c) in p.iter_mut() {
            *c = &*c * &inv;
        }
    }
    fn from_poly(&self, f: &Polynomial, order: &TermOrder) -> Row<BigRational> {
        f.sorted_terms(order)
            .into_iter()
            .map(|(m, c)| match c {
                Coeff::Rat(r) => (m, r),
                Coeff::Mod(_) => panic!("rational back end fed a prime-field polynomial"),
            })
            .collect()
    }
    fn to_poly(&self, row: &Row<BigRational>, ring: Ring) -> Polynomial {
        Polynomial::from_terms(ring, row.iter().map(|(m, c)| (m.clone(), Coeff::Rat(c.clone()))))
            .expect("row lives in the ring")
    }
}

/// Plain modular arithmetic for GF(p).
pub(crate) struct ModArith {
    pub p: u32,
}

impl ModArith {
    fn inv(&self, a: u32) -> u32 {
        crate::ring::FieldSpec::Prime(self.p)
            .inv(&Coeff::Mod(a))
            .map(|c| match c {
                Coeff::Mod(v) => v,
                Coeff::Rat(_) => unreachable!(),
            })
            .expect("non-zero residue")
    }
}

impl Arith for ModArith {
    type C = u32;
    const SCALES: bool = false;

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    fn cancel(&self, a: &u32, b: &u32) -> (u32, u32) {
        (1, self.mul(a, &self.inv(*b)))
    }
    fn normalize(&self, p: &mut Row<u32>) {
        let Some(first) = p.first() else { return };
        if first.1 == 1 {
            return;
        }
        let inv = self.inv(first.1);
        for (_, c) in p.iter_mut() {
            *c = self.mul(c, &inv);
        }
    }
    fn from_poly(&self, f: &Polynomial, order: &TermOrder) -> Row<u32> {
        f.sorted_terms(order)
            .into_iter()
            .map(|(m, c)| match c {
                Coeff::Mod(v) => (m, v),
                Coeff::Rat(_) => panic!("modular back end fed a rational polynomial"),
            })
            .collect()
    }
    fn to_poly(&self, row: &Row<u32>, ring: Ring) -> Polynomial {
        Polynomial::from_terms(ring, row.iter().map(|(m, c)| (m.clone(), Coeff::Mod(*c))))
            .expect("row lives in the ring")
    }
}

/// Bit `i` set when variable `i` occurs; a cheap divisibility pre-filter.
pub(crate) fn divmask(m: &Monomial) -> u64 {
    m.exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |acc, (i, _)| acc | (1u64 << (i % 64)))
}

/// A Groebner-basis element with its leading data cached.
pub(crate) struct Reducer<C> {
    pub row: Row<C>,
    pub mask: u64,
}

impl<C> Reducer<C> {
    pub fn new(row: Row<C>) -> Self {
        let mask = divmask(&row[0].0);
        Reducer { row, mask }
    }
    pub fn lm(&self) -> &Monomial {
        &self.row[0].0
    }
}

pub(crate) fn find_divisor<C>(m: &Monomial, basis: &[&Reducer<C>]) -> Option<usize> {
    let mm = divmask(m);
    basis
        .iter()
        .position(|g| g.mask & !mm == 0 && g.lm().divides(m))
}

/// `s * f[..] - t * q * g` where the leading term of `q * g` equals `f[pos]`.
fn reduce_step<A: Arith>(
    a: &A,
    order: &TermOrder,
    f: &Row<A::C>,
    pos: usize,
    g: &Row<A::C>,
    q: &Monomial,
) -> Row<A::C> {
    let (s, t) = a.cancel(&f[pos].1, &g[0].1);
    let scale = A::SCALES && !a.is_one(&s);
    let mut out: Row<A::C> = Vec::with_capacity(f.len() + g.len());
    for (m, c) in &f[..pos] {
        out.push((m.clone(), if scale { a.mul(c, &s) } else { c.clone() }));
    }
    let mut i = pos + 1;
    let mut j = 1;
    while i < f.len() || j < g.len() {
        let gm = if j < g.len() { Some(g[j].0.mul_unchecked(q)) } else { None };
        let ord = match (i < f.len(), &gm) {
            (true, Some(gm)) => order.cmp(&f[i].0, gm),
            (true, None) => Ordering::Greater,
            (false, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                let c = if scale { a.mul(&f[i].1, &s) } else { f[i].1.clone() };
                out.push((f[i].0.clone(), c));
                i += 1;
            }
            Ordering::Less => {
                let c = a.sub(&zero_like(a, &g[j].1), &a.mul(&g[j].1, &t));
                out.push((gm.unwrap(), c));
                j += 1;
            }
            Ordering::Equal => {
                let lhs = if scale { a.mul(&f[i].1, &s) } else { f[i].1.clone() };
                let c = a.sub(&lhs, &a.mul(&g[j].1, &t));
                if !a.is_zero(&c) {
                    out.push((f[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn zero_like<A: Arith>(a: &A, c: &A::C) -> A::C {
    a.sub(c, c)
}

/// Normal form of `f` scaled to its canonical associate.
pub(crate) fn reduce<A: Arith>(
    a: &A,
    order: &TermOrder,
    f: Row<A::C>,
    basis: &[&Reducer<A::C>],
    full: bool,
) -> Row<A::C> {
    let mut f = reduce_raw(a, order, f, basis, full);
    a.normalize(&mut f);
    f
}

/// Normal form of `f` up to the unit the back end may introduce; with
/// `full == false` only the leading term is reduced.
pub(crate) fn reduce_raw<A: Arith>(
    a: &A,
    order: &TermOrder,
    mut f: Row<A::C>,
    basis: &[&Reducer<A::C>],
    full: bool,
) -> Row<A::C> {
    let mut pos = 0;
    let mut steps = 0usize;
    while pos < f.len() {
        match find_divisor(&f[pos].0, basis) {
            Some(k) => {
                let g = &basis[k].row;
                let q = g[0].0.quotient_of(&f[pos].0).expect("divisor found");
                f = reduce_step(a, order, &f, pos, g, &q);
                steps += 1;
                if A::SCALES && steps % 8 == 0 {
                    a.normalize(&mut f);
                }
            }
            None => {
                if !full {
                    break;
                }
                pos += 1;
            }
        }
    }
    f
}

/// S-polynomial of two rows.
pub(crate) fn spoly<A: Arith>(a: &A, order: &TermOrder, f: &Row<A::C>, g: &Row<A::C>) -> Row<A::C> {
    let l = f[0].0.lcm(&g[0].0);
    let qf = f[0].0.quotient_of(&l).unwrap();
    let qg = g[0].0.quotient_of(&l).unwrap();
    let lifted: Row<A::C> = f.iter().map(|(m, c)| (m.mul_unchecked(&qf), c.clone())).collect();
    let gq = g.clone();
    reduce_step(a, order, &lifted, 0, &gq, &qg)
}

pub(crate) fn check_field(ring: Ring) -> Result<()> {
    match ring.field {
        FieldSpec::Prime(p) if !crate::ring::is_prime(p as u64) => {
            Err(Error::InvalidField(format!("{p} is not prime")))
        }
        _ => Ok(()),
    }
}
