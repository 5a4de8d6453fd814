//! Exact commutative coefficient ring: polynomials and exponentials of
//! linear forms in named commuting variables, with Laurent scalars in the
//! deformation parameters and an optional Cayley–Klein unit `j`.

mod expoly;
mod scalar;
mod series;

pub use expoly::{ExpMono, ExpPoly, LinForm, Var};
pub(crate) use expoly::fmt_coeff;
pub use scalar::{q, qr, Param, Scalar, NPARAMS, Q};
pub use series::{cosh, cosh_j, cosh_j_minus_one_over_j2, sinh, sinh_j_over_j};


#[cfg(test)]
mod tests;
