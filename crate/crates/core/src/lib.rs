//! Exact computational commutative algebra: Groebner bases, Hilbert
//! functions, local cohomology of Borel-type monomial ideals,
//! Castelnuovo-Mumford regularity and audits of explicit regularity and
//! Hilbert-coefficient bounds.

pub mod binom;
pub mod bounds;
pub mod cohomology;
pub mod corpus;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod ring;
pub mod serde_big;

pub use error::{Error, Result};
