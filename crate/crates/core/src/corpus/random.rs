use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::monomial::MonomialIdeal;
use crate::ring::{derive_seed, monomials_of_degree, Monomial, Polynomial, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    General,
    Monomial,
    Squarefree,
    Borel,
}

impl Flavor {
    pub fn name(&self) -> &'static str {
        match self {
            Flavor::General => "general",
            Flavor::Monomial => "monomial",
            Flavor::Squarefree => "squarefree",
            Flavor::Borel => "borel",
        }
    }
}

impl std::str::FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(Flavor::General),
            "monomial" => Ok(Flavor::Monomial),
            "squarefree" => Ok(Flavor::Squarefree),
            "borel" => Ok(Flavor::Borel),
            _ => Err(Error::InvalidInput(format!("unknown flavor {s}"))),
        }
    }
}

pub const MAX_RANDOM_VARS: usize = 6;
pub const MAX_RANDOM_DEGREE: u32 = 5;

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, deg: u32) -> Monomial {
    let mut e = vec![0u32; n];
    for _ in 0..deg {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(e)
}

/// Smallest strongly stable ideal containing `seeds`.
pub fn strongly_stable_closure(n: usize, seeds: Vec<Monomial>) -> MonomialIdeal {
    let mut seen: std::collections::HashSet<Monomial> = seeds.iter().cloned().collect();
    let mut stack = seeds;
    while let Some(m) = stack.pop() {
        for j in 1..n {
            if m.exps()[j] == 0 {
                continue;
            }
            for i in 0..j {
                let moved = m.with_exp(j, m.exps()[j] - 1).with_exp(i, m.exps()[i] + 1);
                if seen.insert(moved.clone()) {
                    stack.push(moved);
                }
            }
        }
    }
    MonomialIdeal::new(n, seen.into_iter().collect())
}

fn one(rng: &mut ChaCha8Rng, n: usize, delta: u32, flavor: Flavor) -> Result<IdealHandle> {
    let ring = Ring::rationals(n);
    let count = rng.gen_range(1..=n.max(2));
    match flavor {
        Flavor::General => {
            let gens = (0..count)
                .map(|_| {
                    let deg = rng.gen_range(1..=delta);
                    let pool = monomials_of_degree(n, deg);
                    let terms = rng.gen_range(1..=pool.len().min(4));
                    let picked: Vec<Monomial> = pool.choose_multiple(rng, terms).cloned().collect();
                    Polynomial::from_terms(
                        ring,
                        picked.into_iter().map(|m| {
                            let c = loop {
                                let c = rng.gen_range(-5i64..=5);
                                if c != 0 {
                                    break c;
                                }
                            };
                            (m, ring.field.from_i64(c))
                        }),
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            IdealHandle::new(ring, gens)
        }
        Flavor::Monomial => {
            let gens = (0..count).map(|_| {
                let deg = rng.gen_range(1..=delta);
                random_monomial(rng, n, deg)
            });
            IdealHandle::from_monomial(ring, &MonomialIdeal::new(n, gens.collect()))
        }
        Flavor::Squarefree => {
            let top = (delta as usize).min(n).max(1);
            let low = 2.min(top);
            let gens = (0..count)
                .map(|_| {
                    let size = rng.gen_range(low..=top);
                    let mut vars: Vec<usize> = (0..n).collect();
                    vars.shuffle(rng);
                    let mut e = vec![0u32; n];
                    for &v in &vars[..size] {
                        e[v] = 1;
                    }
                    Monomial::new(e)
                })
                .collect();
            IdealHandle::from_monomial(ring, &MonomialIdeal::new(n, gens))
        }
        Flavor::Borel => {
            let seeds = (0..count.min(3))
                .map(|_| {
                    let deg = rng.gen_range(1..=delta);
                    random_monomial(rng, n, deg)
                })
                .collect();
            IdealHandle::from_monomial(ring, &strongly_stable_closure(n, seeds))
        }
    }
}

/// `count` reproducible random ideals over the rationals in `n` variables
/// with generator degrees at most `delta`.
pub fn random_ideals(n: usize, delta: u32, count: usize, seed: u64, flavor: Flavor) -> Result<Vec<IdealHandle>> {
    if n == 0 || n > MAX_RANDOM_VARS || delta == 0 || delta > MAX_RANDOM_DEGREE {
        return Err(Error::SizeCap(format!(
            "random ideals need 1 <= n <= {MAX_RANDOM_VARS} and 1 <= delta <= {MAX_RANDOM_DEGREE}"
        )));
    }
    (0..count as u64)
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, k));
            one(&mut rng, n, delta, flavor)
        })
        .collect()
}
