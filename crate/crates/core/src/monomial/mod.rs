//! Monomial ideals: lattice operations, decomposition, standard pairs,
//! degrees and Borel-type tests.

mod borel;
mod decompose;
mod degree;
mod ideal;

pub use borel::BorelTests;
pub use decompose::{decompose, Decomposition};
pub use degree::{colength, degree_data, standard_pairs, DegreeData, StandardPair};
pub use ideal::{minimalize, MonomialIdeal};
