//! Sections of `L(n)^s` and `L(n)^a` evaluated on divisors.
//!
//! For sections `s_1, ..., s_n` of `L` and a divisor `x_1 + ... + x_n`, the
//! symmetric product `s_1 ⊙ ... ⊙ s_n` evaluates to the permanent of the
//! matrix `M_ij = s_i(x_j)` and the wedge `s_1 ∧ ... ∧ s_n` to its
//! determinant. Values depend on the representatives chosen for the points;
//! the canonical integer representative is used throughout.

use num_traits::Zero;
use serde::Serialize;

use super::point::{Divisor3, ProjectivePoint};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::poly::HomogeneousForm;

/// Largest arity accepted by [`sym_section_eval`]; the permanent costs `2^n n` products.
pub const MAX_PERMANENT_ARITY: usize = 8;

/// `M_ij = s_i(x_j)` at canonical representatives.
pub fn evaluation_matrix(sections: &[HomogeneousForm], points: &[ProjectivePoint]) -> Result<Matrix> {
    if sections.len() != points.len() {
        return Err(Error::domain(format!(
            "{} sections evaluated at {} points",
            sections.len(),
            points.len()
        )));
    }
    if let Some(s0) = sections.first() {
        if sections.iter().any(|s| s.degree() != s0.degree()) {
            return Err(Error::domain("sections must share one degree"));
        }
    }
    let reps = points
        .iter()
        .map(|p| p.expect_dim(2).map(|_| p.representative()))
        .collect::<Result<Vec<_>>>()?;
    Ok(sections
        .iter()
        .map(|s| reps.iter().map(|x| s.eval(x)).collect())
        .collect())
}

/// `(s_1 ⊙ ... ⊙ s_n)(x_1 + ... + x_n)`: the permanent of the evaluation matrix.
pub fn sym_section_eval(sections: &[HomogeneousForm], points: &[ProjectivePoint]) -> Result<Rational> {
    if sections.len() > MAX_PERMANENT_ARITY {
        return Err(Error::resource(format!(
            "permanent arity {} exceeds {MAX_PERMANENT_ARITY}",
            sections.len()
        )));
    }
    Ok(linalg::permanent(&evaluation_matrix(sections, points)?))
}

/// `(s_1 ∧ ... ∧ s_n)(x_1 + ... + x_n)`: the determinant of the evaluation matrix.
pub fn alt_section_eval(sections: &[HomogeneousForm], points: &[ProjectivePoint]) -> Result<Rational> {
    Ok(linalg::determinant(&evaluation_matrix(sections, points)?))
}

/// A section `s0^{⊙p0} ⊙ s1^{⊙(3-p0)}` of `L(3)^s` that vanishes on one
/// divisor but not on another.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatingSection {
    /// Point whose multiplicity in the second divisor exceeds that in the first.
    pub base_point: ProjectivePoint,
    pub p0: usize,
    /// Linear form not vanishing at the base point.
    pub s0: HomogeneousForm,
    /// Linear form through the base point, nonzero at every other support point.
    pub s1: HomogeneousForm,
}

impl SeparatingSection {
    pub fn factors(&self) -> Vec<HomogeneousForm> {
        let mut out = vec![self.s0.clone(); self.p0];
        out.extend(std::iter::repeat_n(self.s1.clone(), 3 - self.p0));
        out
    }

    pub fn eval(&self, divisor: &Divisor3) -> Rational {
        sym_section_eval(&self.factors(), divisor.points())
            .expect("three linear sections at three planar points")
    }
}

/// Builds a section of `L(3)^s` with `sigma(d) != 0` and `sigma(d_prime) = 0`.
///
/// Picks a point `x0` whose multiplicity `p0` in `d` is smaller than in
/// `d_prime`, a line `s1` through `x0` missing the rest of both supports, and a
/// coordinate `s0` not vanishing at `x0`. Every term of the permanent on
/// `d_prime` sends some `s1` to `x0`; on `d` the nonzero terms all equal
/// `s0(x0)^p0` times the product of `s1` over the other points.
pub fn separating_section(d: &Divisor3, d_prime: &Divisor3) -> Result<SeparatingSection> {
    if d == d_prime {
        return Err(Error::domain("divisors coincide; nothing to separate"));
    }
    let (base_point, p0) = d_prime
        .support()
        .into_iter()
        .find_map(|(x, m)| {
            let p0 = d.multiplicity(&x);
            (p0 < m).then_some((x, p0))
        })
        .ok_or_else(|| Error::internal("distinct degree-3 divisors without a deficient point"))?;

    let mut others: Vec<ProjectivePoint> = d
        .support()
        .into_iter()
        .chain(d_prime.support())
        .map(|(x, _)| x)
        .filter(|x| *x != base_point)
        .collect();
    others.sort();
    others.dedup();

    let x0 = base_point.representative();
    let s1 = line_through_avoiding(&x0, &others)?;
    let k = x0
        .iter()
        .position(|c| !c.is_zero())
        .expect("canonical points are nonzero");
    let s0 = HomogeneousForm::variable(k);
    Ok(SeparatingSection {
        base_point,
        p0,
        s0,
        s1,
    })
}

/// A member of the pencil of lines through `x0` that misses every point of `avoid`.
fn line_through_avoiding(x0: &[Rational], avoid: &[ProjectivePoint]) -> Result<HomogeneousForm> {
    // Two independent lines through x0: kernel of the row vector x0.
    let basis = linalg::nullspace(&[x0.to_vec()], 3);
    debug_assert_eq!(basis.len(), 2);
    let line = |lambda: i64| -> HomogeneousForm {
        let l = Rational::from_integer(lambda.into());
        let c: Vec<Rational> = (0..3).map(|i| &basis[0][i] + &l * &basis[1][i]).collect();
        HomogeneousForm::linear(c[0].clone(), c[1].clone(), c[2].clone())
    };
    // Each avoided point lies on at most one member of the pencil.
    for lambda in 0..=avoid.len() as i64 {
        let cand = line(lambda);
        if avoid.iter().all(|p| !cand.eval(&p.representative()).is_zero()) {
            return Ok(cand);
        }
    }
    Err(Error::internal("no line of the pencil avoids the given points"))
}
