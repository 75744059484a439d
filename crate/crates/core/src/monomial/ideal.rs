use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Monomial, TermOrder};

/// A monomial ideal given by its minimal generators, sorted by grevlex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Divisibility-minimal subset in canonical order.
pub fn minimalize(nvars: usize, gens: Vec<Monomial>) -> MonomialIdeal {
    MonomialIdeal::new(nvars, gens)
}

impl MonomialIdeal {
    pub fn new(nvars: usize, mut gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "monomial in the wrong number of variables");
        }
        let grevlex = TermOrder::GrevLex;
        gens.sort_by(|a, b| grevlex.cmp(a, b));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        // Sorted by degree first, so a divisor always precedes its multiples.
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { nvars, gens: kept }
    }

    /// Exponent vectors, one per generator.
    pub fn from_exponents(nvars: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut gens = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != nvars {
                return Err(Error::Dimension(format!("exponent vector of length {} in {nvars} variables", r.len())));
            }
            gens.push(Monomial::new(r.clone()));
        }
        Ok(Self::new(nvars, gens))
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    /// `(x_i : i in vars)`, indices 0-based.
    pub fn prime(nvars: usize, vars: &[usize]) -> Self {
        Self::new(nvars, vars.iter().map(|&i| Monomial::var(nvars, i)).collect())
    }

    /// The maximal ideal raised to the power `k`.
    pub fn maximal_power(nvars: usize, k: u32) -> Self {
        Self::new(nvars, crate::ring::monomials_of_degree(nvars, k))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    fn check(&self, other: &MonomialIdeal) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch(format!("{} vs {} variables", self.nvars, other.nvars)));
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(self.nvars, self.gens.iter().chain(&other.gens).cloned().collect()))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check(other)?;
        let mut out = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.mul(b)?);
            }
        }
        Ok(Self::new(self.nvars, out))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check(other)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.lcm(b));
            }
        }
        Ok(Self::new(self.nvars, out))
    }

    /// `I : m` for a monomial `m`.
    pub fn colon_monomial(&self, m: &Monomial) -> Self {
        Self::new(self.nvars, self.gens.iter().map(|g| g.colon(m)).collect())
    }

    /// `I : J`, the intersection of `I : g` over generators `g` of `J`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check(other)?;
        let mut acc = MonomialIdeal::unit(self.nvars);
        for g in &other.gens {
            acc = acc.intersect(&self.colon_monomial(g))?;
        }
        Ok(acc)
    }

    /// `I : x_j^inf`, 0-based `j`.
    pub fn var_saturate(&self, j: usize) -> Self {
        Self::new(self.nvars, self.gens.iter().map(|g| g.strike(j)).collect())
    }

    /// `I : (x_1, ..., x_k)^inf`.
    pub fn saturate_first(&self, k: usize) -> Self {
        let mut acc = MonomialIdeal::unit(self.nvars);
        for j in 0..k {
            acc = acc.intersect(&self.var_saturate(j)).expect("same ring");
        }
        acc
    }

    /// `I : m^inf`.
    pub fn m_saturate(&self) -> Self {
        self.saturate_first(self.nvars)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn radical(&self) -> Self {
        Self::new(self.nvars, self.gens.iter().map(|g| g.radical()).collect())
    }

    /// Largest 1-based index of a variable occurring in a generator.
    pub fn max_var_index(&self) -> usize {
        self.gens.iter().map(|g| g.max_var_index()).max().unwrap_or(0)
    }

    /// Largest exponent of each variable over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut e = vec![0u32; self.nvars];
        for g in &self.gens {
            for (i, &x) in g.exps().iter().enumerate() {
                e[i] = e[i].max(x);
            }
        }
        e
    }

    /// The same generators read in `k` variables; trailing variables must not occur.
    pub fn resized(&self, k: usize) -> Result<Self> {
        if self.max_var_index() > k {
            return Err(Error::Dimension(format!("generators involve x{} but only {k} variables kept", self.max_var_index())));
        }
        Ok(Self::new(k, self.gens.iter().map(|g| g.resized(k)).collect()))
    }

    /// Largest generator degree; 0 for the zero ideal.
    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.display_with(names)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&self.display_with(&names))
    }
}
