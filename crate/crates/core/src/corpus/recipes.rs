use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cohomology::MonomialCurve;
use crate::error::{Error, Result};
use crate::groebner::{GbOptions, IdealHandle};
use crate::monomial::MonomialIdeal;
use crate::ring::{FieldSpec, Monomial, Polynomial, Ring};

use super::random::{random_ideals, Flavor};
use super::toric::toric_ideal;

/// Where an expected value comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Origin {
    /// A closed formula in the recipe parameters.
    Formula { statement: String },
    /// Immediate from the construction.
    Trivial,
    /// Computed by an independent route in the test suite.
    Derived { method: String },
    /// Written in an input file.
    Supplied,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Known {
    pub name: String,
    pub value: Value,
    pub origin: Origin,
}

/// How an entry is built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "recipe", rename_all = "snake_case")]
pub enum Recipe {
    /// The curve with coordinate ring `K[x^e, x^{e-1}y, xy^{e-1}, y^e]`.
    RationalCurve { e: u32 },
    /// `((x,y)^2, x u^t + y v^t)` in `K[x,y,u,v]`.
    DoubleLine { t: u32 },
    /// `(x_1..x_c) cap (x_1^r..x_c^r, x_{c+1}^{r-1}..x_{n-1}^{r-1})`.
    Intersection { n: usize, c: usize, r: u32 },
    TwistedCubic,
    Random { flavor: Flavor, n: usize, delta: u32, seed: u64, index: usize },
    Inline,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub ideal: IdealHandle,
    pub recipe: Recipe,
    pub known: Vec<Known>,
    /// Acceptance checks this entry feeds.
    pub checks: Vec<String>,
}

impl CorpusEntry {
    pub fn known(&self, name: &str) -> Option<&Value> {
        self.known.iter().find(|k| k.name == name).map(|k| &k.value)
    }

    /// The semigroup description, for entries that are projective monomial curves.
    pub fn monomial_curve(&self) -> Option<MonomialCurve> {
        match self.recipe {
            Recipe::RationalCurve { e } => MonomialCurve::new(e, vec![0, 1, e - 1, e]).ok(),
            _ => None,
        }
    }
}

fn formula(name: &str, value: Value, statement: &str) -> Known {
    Known { name: name.into(), value, origin: Origin::Formula { statement: statement.into() } }
}

fn trivial(name: &str, value: Value) -> Known {
    Known { name: name.into(), value, origin: Origin::Trivial }
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

pub fn rational_curve(e: u32) -> Result<CorpusEntry> {
    if e < 2 {
        return Err(Error::InvalidInput("the rational curve needs e >= 2".into()));
    }
    let exps = vec![vec![e, 0], vec![e - 1, 1], vec![1, e - 1], vec![0, e]];
    let ideal = toric_ideal(&exps, FieldSpec::Rationals, &GbOptions::default())?.with_names(names(&["a", "b", "c", "d"]))?;
    let h1: Vec<Value> = (0..=e as i64 - 2).map(|t| json!([t, t * e as i64 + 1 - (t + 1) * (t + 1)])).collect();
    Ok(CorpusEntry {
        id: format!("rational_curve_e{e}"),
        ideal,
        recipe: Recipe::RationalCurve { e },
        known: vec![
            trivial("n", json!(4)),
            trivial("d", json!(2)),
            formula("e", json!(e), "deg = e"),
            formula("adeg", json!(e), "adeg = e for a prime"),
            formula("h1", Value::Array(h1), "h^1(t) = te + 1 - (t+1)^2 for 0 <= t <= e-2"),
        ],
        checks: names(&["toric-cohomology"]),
    })
}

pub fn double_line(t: u32) -> Result<CorpusEntry> {
    if t == 0 {
        return Err(Error::InvalidInput("the double line needs t >= 1".into()));
    }
    let ring = Ring::rationals(4);
    let x = |i: usize, k: u32| Polynomial::from_monomial(ring, Monomial::var_power(4, i, k));
    let mut gens = vec![x(0, 2), x(0, 1).mul(&x(1, 1))?, x(1, 2)];
    gens.push(x(0, 1).mul(&x(2, t))?.add(&x(1, 1).mul(&x(3, t))?)?);
    let ideal = IdealHandle::new(ring, gens)?.with_names(names(&["x", "y", "u", "v"]))?;
    Ok(CorpusEntry {
        id: format!("double_line_t{t}"),
        ideal,
        recipe: Recipe::DoubleLine { t },
        known: vec![
            trivial("n", json!(4)),
            trivial("d", json!(2)),
            formula("e", json!(2), "e = 2"),
            formula("adeg", json!(2), "adeg = 2"),
            formula("reg", json!(t), "reg R/I = t"),
        ],
        checks: names(&["non-reduced-regularity"]),
    })
}

pub fn intersection(n: usize, c: usize, r: u32) -> Result<CorpusEntry> {
    if c == 0 || n <= c + 1 || r < 2 {
        return Err(Error::InvalidInput("the intersection needs c >= 1, n > c + 1 and r >= 2".into()));
    }
    let p = MonomialIdeal::prime(n, &(0..c).collect::<Vec<_>>());
    let mut jg: Vec<Monomial> = (0..c).map(|i| Monomial::var_power(n, i, r)).collect();
    jg.extend((c..n - 1).map(|i| Monomial::var_power(n, i, r - 1)));
    let i = p.intersect(&MonomialIdeal::new(n, jg))?;
    let ideal = IdealHandle::from_monomial(Ring::rationals(n), &i)?;
    let d = (n - c) as u32;
    let reg = (n as i64 - 1) * r as i64 - 2 * n as i64 + c as i64 + 2;
    let constant = (r as i64).pow(c as u32) * (r as i64 - 1).pow(d - 1) - (r as i64 - 1).pow(d - 1);
    let top = ((r as i64).pow(c as u32) - 1) * (r as i64 - 1).pow(d - 1);
    Ok(CorpusEntry {
        id: format!("intersection_n{n}c{c}r{r}"),
        ideal,
        recipe: Recipe::Intersection { n, c, r },
        known: vec![
            trivial("n", json!(n)),
            trivial("d", json!(d)),
            formula("reg", json!(reg), "reg R/I = (n-1)r - 2n + c + 2"),
            formula(
                "hilbert_constant",
                json!(constant),
                "P(t) = binom(t+d-1, d-1) + r^c (r-1)^{d-1} - (r-1)^{d-1}",
            ),
            formula("abs_e_top", json!(top), "|e_{d-1}| = (r^c - 1)(r-1)^{d-1}"),
        ],
        checks: names(&["monomial-bounds"]),
    })
}

/// The 2x2 minors of `[[x0, x1, x2], [x1, x2, x3]]`.
pub fn twisted_cubic() -> Result<CorpusEntry> {
    let ring = Ring::rationals(4);
    let m = |a: usize, b: usize| Polynomial::from_monomial(ring, Monomial::var(4, a).mul(&Monomial::var(4, b)).unwrap());
    let gens = vec![m(0, 2).sub(&m(1, 1))?, m(0, 3).sub(&m(1, 2))?, m(1, 3).sub(&m(2, 2))?];
    let ideal = IdealHandle::new(ring, gens)?.with_names(names(&["x0", "x1", "x2", "x3"]))?;
    Ok(CorpusEntry {
        id: "twisted_cubic".into(),
        ideal,
        recipe: Recipe::TwistedCubic,
        known: vec![
            trivial("n", json!(4)),
            trivial("d", json!(2)),
            trivial("e", json!(3)),
            trivial("reg", json!(1)),
            Known {
                name: "lex_reg_ideal".into(),
                value: json!(4),
                origin: Origin::Derived { method: "lex segment regularity against the Gotzmann number".into() },
            },
        ],
        checks: names(&["lex-segment"]),
    })
}

pub fn random_entries(n: usize, delta: u32, count: usize, seed: u64, flavor: Flavor) -> Result<Vec<CorpusEntry>> {
    Ok(random_ideals(n, delta, count, seed, flavor)?
        .into_iter()
        .enumerate()
        .map(|(index, ideal)| CorpusEntry {
            id: format!("random_{}_n{n}_d{delta}_s{seed}_{index}", flavor.name()),
            ideal,
            recipe: Recipe::Random { flavor, n, delta, seed, index },
            known: vec![trivial("n", json!(n))],
            checks: Vec::new(),
        })
        .collect())
}

/// The fixed named entries, at their default parameters.
pub fn named_entries() -> Result<Vec<CorpusEntry>> {
    Ok(vec![rational_curve(6)?, double_line(3)?, intersection(4, 2, 3)?, twisted_cubic()?])
}
