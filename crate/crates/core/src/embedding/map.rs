use super::point::{Divisor3, ProjectivePoint};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::HomogeneousForm;

/// The line `aX + bY + cZ` attached to `(a : b : c)`.
pub fn dual_line(x: &ProjectivePoint) -> Result<HomogeneousForm> {
    x.expect_dim(2)?;
    let r = x.representative();
    Ok(HomogeneousForm::linear(r[0].clone(), r[1].clone(), r[2].clone()))
}

/// `x1 + x2 + x3 |-> l_x1 * l_x2 * l_x3`, as a point of `P^9`.
pub fn phi3(divisor: &Divisor3) -> ProjectivePoint {
    let [a, b, c] = divisor.points();
    let cubic = dual_line(a)
        .and_then(|la| Ok(la.mul(&dual_line(b)?).mul(&dual_line(c)?)))
        .expect("divisor points lie in P^2");
    ProjectivePoint::from_rationals(&cubic.basis_coefficients())
        .expect("a product of nonzero linear forms is nonzero")
}

/// The cubic Veronese embedding `P^2 -> P^9`, i.e. `phi3(3x)`.
pub fn veronese3(x: &ProjectivePoint) -> Result<ProjectivePoint> {
    Ok(phi3(&Divisor3::triple(x.clone())?))
}

/// Rank of the matrix whose rows are the points' coordinates.
pub fn points_rank(points: &[ProjectivePoint]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Ok(0);
    };
    for p in points {
        p.expect_dim(first.dim())?;
    }
    let rows: Vec<Vec<Rational>> = points.iter().map(ProjectivePoint::representative).collect();
    Ok(linalg::rank(&rows))
}

/// Whether three points of `P^9` lie on a common line (coordinate rank <= 2).
pub fn collinear_p10(p: &ProjectivePoint, q: &ProjectivePoint, r: &ProjectivePoint) -> Result<bool> {
    for x in [p, q, r] {
        if x.dim() != 9 {
            return Err(Error::domain(format!("expected a point of P^9, got P^{}", x.dim())));
        }
    }
    Ok(points_rank(&[p.clone(), q.clone(), r.clone()])? <= 2)
}
