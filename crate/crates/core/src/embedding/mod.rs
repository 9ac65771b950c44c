//! Exact projective geometry for plane curves: the map
//! `phi: C(3) -> P^9` sending `x1 + x2 + x3` to the cubic `l_x1 l_x2 l_x3`,
//! section evaluation on symmetric products, and the plane-quintic
//! construction whose three Veronese points are checked to be non-collinear.
//!
//! Coordinates on `P^9` are the coefficients of a ternary cubic in the
//! descending lexicographic monomial order of [`crate::poly::monomial_basis`].
//! A point `(a : b : c)` of `P^2` is identified with the line `aX + bY + cZ`.

mod map;
mod point;
mod quintic;
mod sections;
mod singular;

pub use map::{collinear_p10, dual_line, phi3, points_rank, veronese3};
pub use point::{Divisor3, ProjectivePoint};
pub use quintic::{
    construct_quintic, default_parameters, verify_quintic_noncollinearity, verify_with,
    ConicParametrization, QuinticCertificate, QuinticConstruction, DEFAULT_SEED,
};
pub use sections::{
    alt_section_eval, evaluation_matrix, separating_section, sym_section_eval, SeparatingSection,
    MAX_PERMANENT_ARITY,
};
pub use singular::{
    rational_points_on, singular_points_sample, singular_points_search, smooth_at, SingularLocus,
    SingularMode, ELIMINATION_MAX_DEGREE, SAMPLE_RADIUS,
};
