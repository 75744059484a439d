use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{gin_candidates, IdealHandle};
use crate::monomial::MonomialIdeal;
use crate::ring::{FieldSpec, TermOrder};

use super::chain::borel_chain;
use super::koszul::{betti_regularity, hochster};
use super::table::{default_window, table_from_chain, CohomologyTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegMethod {
    HpvChain,
    EliahouKervaire,
    GinPipeline,
    /// Betti numbers of a monomial ideal from upper Koszul complexes.
    Koszul,
    /// Local cohomology of a squarefree quotient from links.
    Hochster,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Confidence {
    Exact,
    ProbabilisticGeneric,
    /// Trials disagreed; the value is the least regularity among them,
    /// which still bounds `reg` from above.
    NonGenericUpperBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegStrategy {
    #[default]
    Auto,
    Hpv,
    Ek,
    Gin,
    Koszul,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityCertificate {
    /// `reg(R/I)`.
    pub reg: i64,
    /// `reg_k(R/I)` for `k = 0..=d`, empty when only `reg` is known.
    pub reg_k: Vec<Option<i64>>,
    pub method: RegMethod,
    pub confidence: Confidence,
    /// A second route agreed.
    pub cross_checked: bool,
}

impl RegularityCertificate {
    /// `reg(I) = reg(R/I) + 1`.
    pub fn reg_ideal(&self) -> i64 {
        self.reg + 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegOptions {
    pub seed: u64,
    pub trials: usize,
}

impl Default for RegOptions {
    fn default() -> Self {
        RegOptions { seed: 0, trials: 3 }
    }
}

fn ek(i: &MonomialIdeal) -> i64 {
    if i.is_zero() {
        0
    } else {
        i.max_degree() as i64 - 1
    }
}

fn hpv(i: &MonomialIdeal) -> Result<RegularityCertificate> {
    let chain = borel_chain(i)?;
    let reg_k = table_from_chain(&chain, (0, 0)).reg_list();
    let reg = chain.regularity();
    let cross_checked = i.is_strongly_stable();
    if cross_checked && ek(i) != reg {
        return Err(Error::Hypothesis(format!("chain regularity {reg} disagrees with generator degree bound for {i}")));
    }
    Ok(RegularityCertificate { reg, reg_k, method: RegMethod::HpvChain, confidence: Confidence::Exact, cross_checked })
}

/// Regularity of `R/I` for a monomial ideal, choosing the cheapest exact route.
pub fn monomial_regularity(i: &MonomialIdeal, field: &FieldSpec, strategy: RegStrategy) -> Result<RegularityCertificate> {
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    match strategy {
        RegStrategy::Hpv => hpv(i),
        RegStrategy::Ek => {
            if !i.is_strongly_stable() {
                return Err(Error::Hypothesis(format!("{i} is not strongly stable")));
            }
            Ok(RegularityCertificate {
                reg: ek(i),
                reg_k: Vec::new(),
                method: RegMethod::EliahouKervaire,
                confidence: Confidence::Exact,
                cross_checked: false,
            })
        }
        RegStrategy::Koszul => koszul(i, field),
        RegStrategy::Auto | RegStrategy::Gin => {
            if i.is_borel_type() {
                hpv(i)
            } else if i.is_squarefree() {
                let c = hochster(i, field)?.table((0, 0));
                Ok(RegularityCertificate {
                    reg: c.regularity(),
                    reg_k: c.reg_list(),
                    method: RegMethod::Hochster,
                    confidence: Confidence::Exact,
                    cross_checked: false,
                })
            } else {
                koszul(i, field)
            }
        }
    }
}

fn koszul(i: &MonomialIdeal, field: &FieldSpec) -> Result<RegularityCertificate> {
    let reg = betti_regularity(i, field)?.map_or(0, |r| r - 1);
    Ok(RegularityCertificate {
        reg,
        reg_k: Vec::new(),
        method: RegMethod::Koszul,
        confidence: Confidence::Exact,
        cross_checked: false,
    })
}

/// Regularity of `R/I`. Monomial input is handled exactly; general input
/// goes through the generic initial ideal for the degree reverse
/// lexicographic order, whose regularity equals that of `I`.
pub fn regularity(i: &IdealHandle, strategy: RegStrategy, opts: &RegOptions) -> Result<RegularityCertificate> {
    if i.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    let field = i.ring().field;
    if strategy != RegStrategy::Gin {
        if let Some(m) = i.as_monomial() {
            return monomial_regularity(&m, &field, strategy);
        }
        if strategy != RegStrategy::Auto {
            return Err(Error::Hypothesis("strategy needs a monomial ideal".into()));
        }
    }
    let (table, conf) = gin_cohomology(i, None, opts)?;
    Ok(RegularityCertificate {
        reg: table.regularity(),
        reg_k: table.reg_list(),
        method: RegMethod::GinPipeline,
        confidence: conf,
        cross_checked: false,
    })
}

/// Local cohomology of `R/gin(I)`. When trials disagree the candidate of
/// least regularity is kept and flagged.
pub fn gin_cohomology(i: &IdealHandle, window: Option<(i64, i64)>, opts: &RegOptions) -> Result<(CohomologyTable, Confidence)> {
    let cands = gin_candidates(i, &TermOrder::GrevLex, opts.seed, opts.trials)?;
    let agree = cands.iter().all(|c| c.ideal == cands[0].ideal);
    let mut best: Option<(i64, super::chain::BorelChain)> = None;
    for c in &cands {
        if !c.ideal.is_borel_type() {
            return Err(Error::Genericity(format!("candidate {} is not of Borel type", c.ideal)));
        }
        let chain = borel_chain(&c.ideal)?;
        let r = chain.regularity();
        if best.as_ref().is_none_or(|(b, _)| r < *b) {
            best = Some((r, chain));
        }
        if agree {
            break;
        }
    }
    let (reg, chain) = best.expect("at least one trial");
    let window = window.unwrap_or_else(|| default_window(reg, chain.dim()));
    let conf = if agree { Confidence::ProbabilisticGeneric } else { Confidence::NonGenericUpperBound };
    Ok((table_from_chain(&chain, window), conf))
}

/// Local cohomology of `R/I`: exact for Borel-type and squarefree monomial
/// ideals, through the generic initial ideal otherwise.
pub fn cohomology(i: &IdealHandle, window: Option<(i64, i64)>, opts: &RegOptions) -> Result<(CohomologyTable, Confidence, RegMethod)> {
    if let Some(m) = i.as_monomial() {
        if m.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if m.is_borel_type() {
            let chain = borel_chain(&m)?;
            let w = window.unwrap_or_else(|| default_window(chain.regularity(), chain.dim()));
            return Ok((table_from_chain(&chain, w), Confidence::Exact, RegMethod::HpvChain));
        }
        if m.is_squarefree() {
            let hs = hochster(&m, &i.ring().field)?;
            let reg = hs.table((0, 0)).regularity();
            let w = window.unwrap_or_else(|| default_window(reg, hs.dim));
            return Ok((hs.table(w), Confidence::Exact, RegMethod::Hochster));
        }
    }
    let (t, c) = gin_cohomology(i, window, opts)?;
    Ok((t, c, RegMethod::GinPipeline))
}
