//! Hilbert series and polynomials, Gotzmann representations, lex-segment
//! ideals and a rank-based oracle for Hilbert functions.

mod gotzmann;
mod lex;
mod oracle;
mod poly;
mod series;

pub use gotzmann::{b_via_recursion, gotzmann, GotzmannRep, GOTZMANN_STEP_CAP};
pub use lex::{check_macaulay, lex_segment, lex_segment_of_ideal, lex_segment_of_series, HilbertFunctionTable, LEX_MONOMIAL_CAP};
pub use oracle::{brute_force_hilbert, BRUTE_FORCE_CAP};
pub use poly::HilbertPolynomial;
pub use series::{hilbert_of_ideal, series, HilbertSeries};
