//! Normal ordering in algebras presented as solvable towers of generators,
//! plus tensor powers and structure-map application.

mod element;
mod expand;
mod morphism;
mod multiply;
mod oracle;
mod presentation;
mod tensor;
mod validate;

pub use element::{NCElement, NcMono, Part};
pub use morphism::Morphism;
pub use oracle::oracle_multiply;
pub use presentation::{Level, Presentation, Rule, TowerBuilder, DEFAULT_EXPONENT_CAP};
pub use tensor::TensorElement;
pub use validate::{validate_presentation, ValidationIssue, ValidationReport};

#[cfg(test)]
mod tests;
