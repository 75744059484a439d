//! Exact coefficients, monomials, term orders, polynomials and linear
//! changes of coordinates.

mod change;
mod field;
mod monomial;
mod order;
mod poly;

pub use change::{derive_seed, random_linear_form, LinearChange, RANDOM_ENTRY_BOUND};
pub use field::{is_prime, Coeff, FieldSpec};
pub use monomial::{monomials_of_degree, Monomial};
pub use order::TermOrder;
pub use poly::{Polynomial, Ring};
