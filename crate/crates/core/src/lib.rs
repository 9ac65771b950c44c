//! Exact intersection numbers on symmetric products of curves, linear-series
//! bounds, and explicit projective models of `C(3)` for plane curves.
//!
//! Everything is computed over `Z` or `Q` with arbitrary precision; there is
//! no floating point anywhere in the crate.

pub mod arith;
pub mod embedding;
pub mod error;
pub mod linalg;
pub mod linear_series;
pub mod ns_calculus;
pub mod poly;

pub use arith::Rational;
pub use embedding::{
    ConicParametrization, Divisor3, ProjectivePoint, QuinticCertificate, QuinticConstruction,
    SeparatingSection, SingularLocus, SingularMode,
};
pub use error::{Error, Result};
pub use linear_series::{
    Candidate, CurveClass, Degree9Bound, MinDegreeConclusion, SearchReport, SeriesSpec,
};
pub use ns_calculus::{DivisorClass, SymmetricProductSpace};
pub use poly::{BinaryForm, HomogeneousForm, UniPoly};
