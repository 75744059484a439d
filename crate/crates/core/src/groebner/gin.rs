use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::ring::{derive_seed, FieldSpec, LinearChange, TermOrder};

use super::IdealHandle;

/// Smallest prime characteristic accepted for generic initial ideals.
pub const GIN_MIN_PRIME: u32 = 32003;

/// An initial ideal after one seeded random change of coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GinCandidate {
    pub seed: u64,
    pub ideal: MonomialIdeal,
}

/// Agreed generic initial ideal. Agreement of independent trials is
/// evidence of genericity, not a proof.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GinResult {
    pub ideal: MonomialIdeal,
    pub seeds: Vec<u64>,
    pub probabilistic_generic: bool,
}

/// Initial ideals for `trials` independent seeds, in seed order.
pub fn gin_candidates(i: &IdealHandle, order: &TermOrder, seed: u64, trials: usize) -> Result<Vec<GinCandidate>> {
    let ring = i.ring();
    if let FieldSpec::Prime(p) = ring.field {
        if p < GIN_MIN_PRIME {
            return Err(Error::InvalidField(format!(
                "generic initial ideals need characteristic 0 or at least {GIN_MIN_PRIME}, got {p}"
            )));
        }
    }
    if trials == 0 {
        return Err(Error::InvalidInput("at least one trial is needed".into()));
    }
    (0..trials as u64)
        .into_par_iter()
        .map(|k| {
            let s = derive_seed(seed, k);
            let moved = i.apply(&LinearChange::random(ring, s))?;
            Ok(GinCandidate { seed: s, ideal: moved.initial_ideal(order)? })
        })
        .collect()
}

/// The generic initial ideal, accepted only when all trials agree.
pub fn gin(i: &IdealHandle, order: &TermOrder, seed: u64, trials: usize) -> Result<GinResult> {
    let cands = gin_candidates(i, order, seed, trials)?;
    let first = &cands[0].ideal;
    if cands.iter().any(|c| c.ideal != *first) {
        let listing: Vec<String> = cands.iter().map(|c| format!("seed {}: {}", c.seed, c.ideal)).collect();
        return Err(Error::Genericity(format!("trials disagree: {}", listing.join("; "))));
    }
    if matches!(i.ring().field, FieldSpec::Prime(_)) && !first.is_borel_type() {
        return Err(Error::Genericity(format!("candidate {first} is not of Borel type")));
    }
    Ok(GinResult { ideal: first.clone(), seeds: cands.iter().map(|c| c.seed).collect(), probabilistic_generic: true })
}
