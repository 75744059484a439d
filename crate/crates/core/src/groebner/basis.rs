use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::ring::{FieldSpec, Monomial, Polynomial, Ring, TermOrder};

use super::buchberger::{buchberger, GbOptions};
use super::kernel::{check_field, reduce_raw, Arith, IntArith, ModArith, RatArith, Reducer};

/// A Groebner basis; reduced unless it is a degree-truncated partial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: TermOrder,
    generators: Vec<Polynomial>,
    reduced: bool,
}

fn run<A: Arith>(
    a: &A,
    ring: Ring,
    gens: &[Polynomial],
    order: &TermOrder,
    opts: &GbOptions,
    truncate: Option<u64>,
) -> Result<Vec<Polynomial>> {
    let rows = gens.iter().map(|g| a.from_poly(g, order)).collect();
    let basis = buchberger(a, order, rows, opts, truncate)?;
    Ok(basis.iter().map(|r| a.to_poly(r, ring)).collect())
}

impl GroebnerBasis {
    /// Reduced Groebner basis of the ideal generated by `gens`.
    ///
    /// Input need not be homogeneous.
    pub fn compute(ring: Ring, gens: &[Polynomial], order: &TermOrder, opts: &GbOptions) -> Result<Self> {
        Self::compute_truncated(ring, gens, order, opts, None)
    }

    /// For homogeneous input: a basis valid in degrees up to `truncate`.
    pub(crate) fn compute_truncated(
        ring: Ring,
        gens: &[Polynomial],
        order: &TermOrder,
        opts: &GbOptions,
        truncate: Option<u64>,
    ) -> Result<Self> {
        check_field(ring)?;
        order.check(ring.nvars)?;
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch(format!("generator lives in {} variables over {}", g.ring().nvars, g.field())));
            }
        }
        let nonzero: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let generators = match ring.field {
            FieldSpec::Rationals => run(&IntArith, ring, &nonzero, order, opts, truncate)?,
            FieldSpec::Prime(p) => run(&ModArith { p }, ring, &nonzero, order, opts, truncate)?,
        };
        Ok(GroebnerBasis { ring, order: order.clone(), generators, reduced: truncate.is_none() })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Monic, sorted by increasing leading monomial.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.total_degree() == Some(0))
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().filter_map(|g| g.leading_monomial(&self.order)).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.nvars, self.leading_monomials())
    }

    /// Largest degree of a basis element.
    pub fn max_degree(&self) -> u64 {
        self.generators.iter().filter_map(|g| g.total_degree()).max().unwrap_or(0)
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != self.ring {
            return Err(Error::RingMismatch("polynomial and basis live in different rings".into()));
        }
        Ok(match self.ring.field {
            FieldSpec::Rationals => nf_with(&RatArith, self, f),
            FieldSpec::Prime(p) => nf_with(&ModArith { p }, self, f),
        })
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Same ideal as `other` (bases must share ring and order).
    pub fn same_ideal(&self, other: &GroebnerBasis) -> bool {
        self.ring == other.ring && self.order == other.order && self.generators == other.generators
    }
}

fn nf_with<A: Arith>(a: &A, gb: &GroebnerBasis, f: &Polynomial) -> Polynomial {
    assert!(!A::SCALES, "normal forms need a field back end");
    let reducers: Vec<Reducer<A::C>> =
        gb.generators.iter().map(|g| Reducer::new(a.from_poly(g, &gb.order))).collect();
    let refs: Vec<&Reducer<A::C>> = reducers.iter().collect();
    let r = reduce_raw(a, &gb.order, a.from_poly(f, &gb.order), &refs, true);
    a.to_poly(&r, gb.ring)
}
