//! Named ideals built from recipes, seeded random ideals and toric
//! presentations.

mod random;
mod recipes;
mod toric;

pub use random::{random_ideals, strongly_stable_closure, Flavor, MAX_RANDOM_DEGREE, MAX_RANDOM_VARS};
pub use recipes::{
    double_line, intersection, named_entries, random_entries, rational_curve, twisted_cubic, CorpusEntry, Known, Origin,
    Recipe,
};
pub use toric::toric_ideal;
