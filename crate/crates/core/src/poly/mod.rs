//! Sparse exact polynomials: ternary forms, univariate polynomials and
//! binary forms over the rationals.

mod binary;
mod form;
mod univariate;

pub use binary::BinaryForm;
pub use form::{monomial_basis, Exponent, HomogeneousForm};
pub use univariate::{interpolate, resultant, UniPoly};
