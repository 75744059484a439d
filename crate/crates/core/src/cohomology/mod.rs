//! Local cohomology of Borel-type quotients through the saturation chain,
//! a-invariants, regularity certificates, hyperplane sections and the
//! Grothendieck-Serre identity.

mod chain;
mod curve;
mod koszul;
mod regularity;
mod section;
mod simplicial;
mod table;

pub use chain::{borel_chain, BorelChain, ChainStep};
pub use curve::MonomialCurve;
pub use koszul::{betti_regularity, graded_betti, hochster, stanley_reisner, SquarefreeCohomology, LCM_LATTICE_CAP};
pub use regularity::{
    cohomology, gin_cohomology, monomial_regularity, regularity, Confidence, RegMethod, RegOptions, RegStrategy,
    RegularityCertificate,
};
pub use section::{hyperplane_section, krull_dim};
pub use simplicial::Complex;
pub use table::{default_window, gs_check, gs_check_table, local_cohomology, table_from_chain, CohomologyTable, GsCheck};

#[cfg(test)]
mod tests;
