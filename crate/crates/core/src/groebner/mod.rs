//! Groebner bases, normal forms, ideal handles, colon ideals, saturation
//! and generic initial ideals.

mod basis;
mod buchberger;
mod colon;
mod gin;
mod ideal;
mod kernel;

pub use basis::GroebnerBasis;
pub use buchberger::{GbOptions, PairStrategy};
pub use colon::{
    colon_and_saturate, divide_exact, intersect, m_saturate, saturate_last_variable, ColonMode, SATURATION_ATTEMPTS,
};
pub use gin::{gin, gin_candidates, GinCandidate, GinResult, GIN_MIN_PRIME};
pub use ideal::IdealHandle;

#[cfg(test)]
mod tests;
