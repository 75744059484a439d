use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::ring::{LinearChange, Polynomial, Ring, TermOrder};

use super::{GbOptions, GroebnerBasis};

/// A homogeneous ideal with cached Groebner bases.
pub struct IdealHandle {
    ring: Ring,
    gens: Vec<Polynomial>,
    names: Vec<String>,
    opts: GbOptions,
    bases: Mutex<HashMap<TermOrder, Arc<GroebnerBasis>>>,
    minimal: Mutex<Option<Arc<Vec<Polynomial>>>>,
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl IdealHandle {
    /// Zero generators are dropped; the rest must be homogeneous.
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch("generator outside the ideal's ring".into()));
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                let d = g.total_degree().unwrap_or(0);
                let bad = g.terms().find(|(m, _)| m.degree() != d).or_else(|| g.terms().next()).unwrap();
                return Err(Error::NonHomogeneous(bad.0.display_with(&default_names(ring.nvars))));
            }
            kept.push(g);
        }
        Ok(IdealHandle {
            ring,
            gens: kept,
            names: default_names(ring.nvars),
            opts: GbOptions::default(),
            bases: Mutex::new(HashMap::new()),
            minimal: Mutex::new(None),
        })
    }

    pub fn from_monomial(ring: Ring, i: &MonomialIdeal) -> Result<Self> {
        if i.nvars() != ring.nvars {
            return Err(Error::Dimension(format!("ideal in {} variables, ring has {}", i.nvars(), ring.nvars)));
        }
        Self::new(ring, i.generators().iter().map(|m| Polynomial::from_monomial(ring, m.clone())).collect())
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.ring.nvars {
            return Err(Error::Dimension(format!("{} names for {} variables", names.len(), self.ring.nvars)));
        }
        self.names = names;
        Ok(self)
    }

    /// Replaces the resource caps; cached bases are dropped.
    pub fn with_options(mut self, opts: GbOptions) -> Self {
        self.opts = opts;
        self.bases = Mutex::new(HashMap::new());
        self
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn options(&self) -> &GbOptions {
        &self.opts
    }

    /// Same options and names, new generators.
    pub(crate) fn derived(&self, ring: Ring, gens: Vec<Polynomial>) -> Result<Self> {
        let h = Self::new(ring, gens)?.with_options(self.opts.clone());
        if ring.nvars == self.ring.nvars {
            h.with_names(self.names.clone())
        } else {
            Ok(h)
        }
    }

    /// Cached reduced Groebner basis.
    pub fn gb(&self, order: &TermOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(b) = self.bases.lock().unwrap().get(order) {
            return Ok(b.clone());
        }
        let b = Arc::new(GroebnerBasis::compute(self.ring, &self.gens, order, &self.opts)?);
        Ok(self.bases.lock().unwrap().entry(order.clone()).or_insert(b).clone())
    }

    pub fn initial_ideal(&self, order: &TermOrder) -> Result<MonomialIdeal> {
        Ok(self.gb(order)?.initial_ideal())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.gb(&TermOrder::GrevLex)?.contains(f)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb(&TermOrder::GrevLex)?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Equality of ideals via reduced grevlex bases.
    pub fn same_ideal(&self, other: &IdealHandle) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("ideals in different rings".into()));
        }
        Ok(self.gb(&TermOrder::GrevLex)?.same_ideal(&*other.gb(&TermOrder::GrevLex)?))
    }

    /// Generated by monomials.
    pub fn as_monomial(&self) -> Option<MonomialIdeal> {
        if self.gens.iter().all(|g| g.is_monomial()) {
            Some(MonomialIdeal::new(
                self.ring.nvars,
                self.gens.iter().filter_map(|g| g.terms().next().map(|(m, _)| m.clone())).collect(),
            ))
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.as_monomial().is_some()
    }

    /// A minimal homogeneous generating set chosen from the generators in
    /// increasing degree.
    pub fn minimal_generators(&self) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(m) = self.minimal.lock().unwrap().as_ref() {
            return Ok(m.clone());
        }
        let computed = if let Some(mi) = self.as_monomial() {
            mi.generators().iter().map(|m| Polynomial::from_monomial(self.ring, m.clone())).collect()
        } else {
            let mut sorted = self.gens.clone();
            sorted.sort_by_key(|g| g.total_degree());
            let mut kept: Vec<Polynomial> = Vec::new();
            for f in sorted {
                let d = f.total_degree();
                let gb = GroebnerBasis::compute_truncated(self.ring, &kept, &TermOrder::GrevLex, &self.opts, d)?;
                if !gb.normal_form(&f)?.is_zero() {
                    kept.push(f);
                }
            }
            kept
        };
        let arc = Arc::new(computed);
        *self.minimal.lock().unwrap() = Some(arc.clone());
        Ok(arc)
    }

    /// Degrees of a minimal generating set, decreasing.
    pub fn deltas(&self) -> Result<Vec<u64>> {
        let mut d: Vec<u64> = self.minimal_generators()?.iter().filter_map(|g| g.total_degree()).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        Ok(d)
    }

    /// Largest minimal generator degree.
    pub fn max_delta(&self) -> Result<u64> {
        Ok(self.deltas()?.first().copied().unwrap_or(0))
    }

    /// SHA-256 of a canonical serialization of the generators.
    pub fn fingerprint(&self) -> String {
        let order = TermOrder::GrevLex;
        let mut lines: Vec<String> = self
            .gens
            .iter()
            .map(|g| {
                g.monic(&order)
                    .sorted_terms(&order)
                    .iter()
                    .map(|(m, c)| format!("{c}*{:?}", m.exps()))
                    .collect::<Vec<_>>()
                    .join("+")
            })
            .collect();
        lines.sort();
        lines.dedup();
        let mut h = Sha256::new();
        h.update(format!("{}|{}\n", self.ring.field, self.ring.nvars));
        for l in &lines {
            h.update(l.as_bytes());
            h.update(b"\n");
        }
        hex::encode(h.finalize())
    }

    /// The ideal `{f(Ax) : f in I}`.
    pub fn apply(&self, change: &LinearChange) -> Result<IdealHandle> {
        let gens = self.gens.iter().map(|g| change.apply(g)).collect::<Result<Vec<_>>>()?;
        self.derived(self.ring, gens)
    }

    pub fn display_generators(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.display_with(&self.names)).collect()
    }
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        IdealHandle {
            ring: self.ring,
            gens: self.gens.clone(),
            names: self.names.clone(),
            opts: self.opts.clone(),
            bases: Mutex::new(self.bases.lock().unwrap().clone()),
            minimal: Mutex::new(self.minimal.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealHandle({})", self.display_generators().join(", "))
    }
}
