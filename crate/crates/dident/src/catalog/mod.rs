//! Curated catalogs: the group census and the numbered formulas.

pub mod formulas;
pub mod groups;

pub use formulas::{catalog as formula_catalog, resolve as resolve_formula, FormulaEntry};
pub use groups::{census_selfcheck, Census, GroupEntry};
