//! Text formats: ideal files and JSON audit reports.

mod file;
mod poly;
mod report;

pub use file::{parse_field, parse_ideal_file, parse_order, parse_recipe, IdealFile};
pub use poly::parse_polynomial;
pub use report::{ReportDocument, Seeds, SCHEMA_VERSION};

#[cfg(test)]
mod tests;
