//! Exact evaluators for the explicit regularity, cohomology and
//! Hilbert-coefficient bounds, an audit harness comparing them with computed
//! invariants, and an exhaustive finiteness explorer.

mod audit;
mod eval;
mod explore;

pub use audit::{
    audit, AdegSource, AuditError, AuditInput, AuditOptions, BoundEntry, BoundReport, GotzmannRun, InvariantSnapshot,
    Reducedness,
};
pub use eval::{eval_bound, f3_premise, f4_base, pi, sigma, spec, BoundSpec, Hypothesis, Invariants, BOUND_SPECS, MAX_BOUND_BITS};
pub use explore::{finiteness_explorer, FinitenessReport, HilbertFunctionRecord, EXPLORER_CAP, EXPLORER_MAX_VARS};

#[cfg(test)]
mod tests;
