//! Smoothness checks for plane curves.
//!
//! Elimination mode certifies the whole singular locus. After a
//! deterministic change of coordinates putting the projection centre
//! `(0:0:1)` off the curve `F_X = 0`, the singular points project to the
//! common roots (in `(X : Y)`) of
//!
//! ```text
//! R_u(X, Y) = Res_Z(F_X, F_Y + u F_Z)
//! ```
//!
//! for every `u`. Since `R_u` has degree at most `deg F - 1` in `u`, the gcd
//! over that many plus one values of `u` is exactly the projection of the
//! singular locus. Each `R_u` is itself interpolated from Sylvester
//! determinants over the rationals. A constant gcd is a smoothness
//! certificate; otherwise the rational roots are lifted back to points.

use num_traits::{One, Zero};
use serde::Serialize;

use super::point::ProjectivePoint;
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::poly::{interpolate, resultant, HomogeneousForm, UniPoly};

/// Degree guard for elimination mode.
pub const ELIMINATION_MAX_DEGREE: u32 = 6;

/// Sample mode looks at lines through `(0:0:1)` and `(a:b:0)` with
/// `|a|, |b| <= SAMPLE_RADIUS`.
pub const SAMPLE_RADIUS: i64 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularMode {
    Sample,
    Eliminate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularLocus {
    pub mode: SingularMode,
    /// Singular points with rational coordinates, sorted.
    pub points: Vec<ProjectivePoint>,
    /// Number of singular points (counted by distinct projections) that
    /// are not rational and so cannot be listed. Always 0 in sample mode.
    pub unresolved: usize,
    /// Curve points examined in sample mode.
    pub checked: usize,
}

impl SingularLocus {
    /// True only for an elimination-mode result with no singular points.
    pub fn certifies_smooth(&self) -> bool {
        self.mode == SingularMode::Eliminate && self.points.is_empty() && self.unresolved == 0
    }
}

/// Whether the gradient of `curve` is nonzero at the point `x` of the curve.
pub fn smooth_at(curve: &HomogeneousForm, x: &ProjectivePoint) -> Result<bool> {
    x.expect_dim(2)?;
    let r = x.representative();
    if !curve.eval(&r).is_zero() {
        return Err(Error::domain(format!("{x} does not lie on the curve")));
    }
    Ok(curve.gradient().iter().any(|g| !g.eval(&r).is_zero()))
}

pub fn singular_points_search(curve: &HomogeneousForm, mode: SingularMode) -> Result<SingularLocus> {
    match mode {
        SingularMode::Sample => singular_points_sample(curve, &[]),
        SingularMode::Eliminate => eliminate(curve),
    }
}

/// Rational points of the curve on the sampling grid: the rational roots
/// `z` of `F(a, b, Z)` for coprime `|a|, |b| <= radius`, plus `(0:0:1)`
/// when it lies on the curve.
pub fn rational_points_on(curve: &HomogeneousForm, radius: i64) -> Vec<ProjectivePoint> {
    let mut out = Vec::new();
    let zero = Rational::zero();
    if curve.eval(&[zero.clone(), zero.clone(), Rational::one()]).is_zero() {
        out.push(ProjectivePoint::from_i64(&[0, 0, 1]).expect("nonzero"));
    }
    for a in -radius..=radius {
        for b in -radius..=radius {
            let first_positive = a > 0 || (a == 0 && b > 0);
            if !first_positive || num_integer::gcd(a, b) != 1 {
                continue;
            }
            let (qa, qb) = (Rational::from_integer(a.into()), Rational::from_integer(b.into()));
            let along = UniPoly::new(curve.restrict_to_z_line(&qa, &qb));
            if along.is_zero() {
                continue;
            }
            for z in along.rational_roots() {
                let p = ProjectivePoint::from_rationals(&[qa.clone(), qb.clone(), z])
                    .expect("first coordinates are nonzero");
                out.push(p);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Sample-mode check: `smooth_at` on the grid points of [`rational_points_on`]
/// and on `marked` (which must lie on the curve). Returns the failures only.
pub fn singular_points_sample(
    curve: &HomogeneousForm,
    marked: &[ProjectivePoint],
) -> Result<SingularLocus> {
    check_curve(curve)?;
    let mut pts = rational_points_on(curve, SAMPLE_RADIUS);
    pts.extend(marked.iter().cloned());
    pts.sort();
    pts.dedup();
    let mut bad = Vec::new();
    for p in &pts {
        if !smooth_at(curve, p)? {
            bad.push(p.clone());
        }
    }
    Ok(SingularLocus {
        mode: SingularMode::Sample,
        points: bad,
        unresolved: 0,
        checked: pts.len(),
    })
}

fn check_curve(curve: &HomogeneousForm) -> Result<()> {
    if curve.is_zero() || curve.degree() == 0 {
        return Err(Error::domain("not a plane curve: zero or constant form"));
    }
    Ok(())
}

type Mat3 = [[Rational; 3]; 3];

/// Coordinate changes tried in turn: `x = A y` with `A e_3 = (k+1, k+2, 1)`.
fn coordinate_change(k: i64) -> Mat3 {
    let r = |v: i64| Rational::from_integer(v.into());
    [
        [r(1), r(0), r(k + 1)],
        [r(0), r(1), r(k + 2)],
        [r(0), r(0), r(1)],
    ]
}

fn apply(a: &Mat3, y: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(y).map(|(c, v)| c * v).sum())
        .collect()
}

fn eliminate(curve: &HomogeneousForm) -> Result<SingularLocus> {
    check_curve(curve)?;
    let deg = curve.degree();
    if deg > ELIMINATION_MAX_DEGREE {
        return Err(Error::resource(format!(
            "elimination mode supports degree <= {ELIMINATION_MAX_DEGREE}, got {deg}"
        )));
    }
    let empty = SingularLocus {
        mode: SingularMode::Eliminate,
        points: Vec::new(),
        unresolved: 0,
        checked: 0,
    };
    if deg == 1 {
        return Ok(empty);
    }

    let (a, g) = (0..64)
        .map(|k| {
            let a = coordinate_change(k);
            let g = curve.linear_substitution(&a);
            (a, g)
        })
        .find(|(_, g)| !g.partial(0).coefficient(&[0, 0, deg - 1]).is_zero())
        .ok_or_else(|| Error::internal("no admissible coordinate change found"))?;
    let grad = g.gradient();
    let m = (deg - 1) as i64;

    // r_j(y) = Res_Z(G_X, G_Y + u_j G_Z)(1, y); deg_y <= m^2.
    let ys: Vec<Rational> = (0..=m * m).map(|v| Rational::from_integer(v.into())).collect();
    let mut gcd_all: Option<UniPoly> = None;
    let mut root_at_infinity = true;
    for j in 0..=m {
        let u = Rational::from_integer(j.into());
        let combo = grad[1].add(&grad[2].scale(&u)).expect("equal degrees");
        let vals: Vec<Rational> = ys
            .iter()
            .map(|y| {
                let f = grad[0].restrict_to_z_line(&Rational::one(), y);
                let h = combo.restrict_to_z_line(&Rational::one(), y);
                resultant(&f, &h)
            })
            .collect();
        let r = interpolate(&ys, &vals);
        if r.degree().is_some_and(|d| d as i64 == m * m) {
            root_at_infinity = false;
        }
        gcd_all = Some(match gcd_all {
            None => r.monic(),
            Some(acc) => acc.gcd(&r),
        });
    }
    let h = gcd_all.expect("at least one value of u");
    if h.is_zero() {
        return Err(Error::domain(
            "singular locus is not finite: the curve has a multiple component",
        ));
    }

    let mut points = Vec::new();
    let mut unresolved = 0;
    let h = h.squarefree_part();
    let finite_roots = h.rational_roots();
    unresolved += h.degree().unwrap_or(0) - finite_roots.len();
    let mut lines: Vec<(Rational, Rational)> = finite_roots
        .into_iter()
        .map(|y| (Rational::one(), y))
        .collect();
    if root_at_infinity {
        lines.push((Rational::zero(), Rational::one()));
    }
    for (x, y) in lines {
        let common = grad
            .iter()
            .map(|gi| UniPoly::new(gi.restrict_to_z_line(&x, &y)))
            .fold(UniPoly::zero(), |acc, p| acc.gcd(&p));
        let zs = common.rational_roots();
        unresolved += common.squarefree_part().degree().unwrap_or(0) - zs.len();
        for z in zs {
            let p = apply(&a, &[x.clone(), y.clone(), z]);
            points.push(ProjectivePoint::from_rationals(&p)?);
        }
    }
    points.sort();
    points.dedup();
    for p in &points {
        if smooth_at(curve, p)? {
            return Err(Error::internal(format!("elimination produced a smooth point {p}")));
        }
    }
    Ok(SingularLocus {
        points,
        unresolved,
        ..empty
    })
}
