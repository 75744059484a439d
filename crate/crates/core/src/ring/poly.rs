use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Coeff, FieldSpec, Monomial, TermOrder};
use crate::error::{Error, Result};

/// Variable count plus coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    pub nvars: usize,
    pub field: FieldSpec,
}

impl Ring {
    pub fn new(nvars: usize, field: FieldSpec) -> Self {
        Ring { nvars, field }
    }

    pub fn rationals(nvars: usize) -> Self {
        Ring::new(nvars, FieldSpec::Rationals)
    }

    pub fn with_nvars(&self, nvars: usize) -> Self {
        Ring { nvars, field: self.field }
    }
}

/// Sparse polynomial: monomial -> non-zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial { ring, terms: BTreeMap::new() }
    }

    pub fn constant(ring: Ring, c: Coeff) -> Self {
        Self::term(ring, Monomial::one(ring.nvars), c)
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn var(ring: Ring, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars, i), ring.field.one())
    }

    pub fn from_monomial(ring: Ring, m: Monomial) -> Self {
        Self::term(ring, m, ring.field.one())
    }

    pub fn term(ring: Ring, m: Monomial, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !ring.field.is_zero(&c) {
            terms.insert(m, c);
        }
        Polynomial { ring, terms }
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(ring: Ring, it: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut terms: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in it {
            if m.nvars() != ring.nvars {
                return Err(Error::Dimension(format!(
                    "monomial {m} does not live in {} variables",
                    ring.nvars
                )));
            }
            accumulate(&ring.field, &mut terms, m, c);
        }
        Ok(Polynomial { ring, terms })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.field.zero())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{} vars over {} vs {} vars over {}",
                self.ring.nvars, self.ring.field, other.ring.nvars, other.ring.field
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&self.ring.field, &mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial { ring: self.ring, terms })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let k = self.ring.field;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                accumulate(&k, &mut terms, m1.mul(m2)?, k.mul(c1, c2));
            }
        }
        Ok(Polynomial { ring: self.ring, terms })
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(self.ring);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Polynomial {
        let k = self.ring.field;
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), k.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let k = self.ring.field;
        if k.is_zero(c) {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), k.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| Ok((t.mul(m)?, c.clone())))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Polynomial { ring: self.ring, terms })
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading(&self, order: &TermOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<Monomial> {
        self.leading(order).map(|(m, _)| m.clone())
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.field.inv(c).expect("non-zero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(Monomial, Coeff)> {
        let mut v: Vec<(Monomial, Coeff)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    /// Substitutes `x_i -> images[i]`; the result lives in the ring of the images.
    pub fn substitute(&self, images: &[Polynomial], target: Ring) -> Result<Polynomial> {
        if images.len() != self.ring.nvars {
            return Err(Error::Dimension(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars
            )));
        }
        if images.iter().any(|p| p.ring != target) || target.field != self.ring.field {
            return Err(Error::RingMismatch("substitution images in a different ring".into()));
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i])?;
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize])?;
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let order = TermOrder::GrevLex;
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(&order).iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { self.ring.field.neg(c) } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let one = self.ring.field.is_one(&abs);
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if one {
                out.push_str(&m.display_with(names));
            } else {
                out.push_str(&format!("{abs}*{}", m.display_with(names)));
            }
        }
        out
    }
}

fn accumulate(k: &FieldSpec, terms: &mut BTreeMap<Monomial, Coeff>, m: Monomial, c: Coeff) {
    use std::collections::btree_map::Entry;
    if k.is_zero(&c) {
        return;
    }
    match terms.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = k.add(o.get(), &c);
            if k.is_zero(&s) {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: usize) -> Ring {
        Ring::rationals(n)
    }

    #[test]
    fn difference_of_squares() {
        let r = q(2);
        let (x, y) = (Polynomial::var(r, 0), Polynomial::var(r, 1));
        let p = x.sub(&y).unwrap().mul(&x.add(&y).unwrap()).unwrap();
        let expected = x.pow(2).unwrap().sub(&y.pow(2).unwrap()).unwrap();
        assert_eq!(p, expected);
        assert_eq!(p.add(&Polynomial::zero(r)).unwrap(), p);
    }

    #[test]
    fn gf5_scalars_cancel() {
        let r = Ring::new(1, FieldSpec::prime(5).unwrap());
        let k = r.field;
        let x = Polynomial::var(r, 0);
        let p = x.scale(&k.from_i64(2)).mul(&x.scale(&k.from_i64(3))).unwrap();
        assert_eq!(p, x.pow(2).unwrap());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = Polynomial::var(q(2), 0);
        let b = Polynomial::var(q(3), 0);
        assert!(matches!(a.add(&b), Err(Error::RingMismatch(_))));
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..3, n), -5i64..5, 1i64..4),
            0..6,
        )
        .prop_map(move |ts| {
            let r = q(n);
            Polynomial::from_terms(
                r,
                ts.into_iter().map(|(e, a, b)| {
                    let c = num_rational::BigRational::new(a.into(), b.into());
                    (Monomial::new(e), Coeff::Rat(c))
                }),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn add_then_subtract_is_exact(f in arb_poly(3), g in arb_poly(3)) {
            prop_assert_eq!(f.add(&g).unwrap().sub(&g).unwrap(), f);
        }
    }
}
