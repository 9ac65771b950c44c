//! A smooth plane quintic `C` cutting the divisor `3(p1 + p2 + p3) + q` on a
//! smooth conic, and the check that the three points `phi(3 p_i)` of `P^9`
//! are not collinear.
//!
//! The conic is the image of `P^1` under three binary quadrics. Pulling the
//! 21 coefficients of a general quintic back to `P^1` gives a binary form of
//! degree 10; vanishing to order 3 at each `p_i` and order 1 at `q` is 10
//! linear conditions, which leaves at least 11 dimensions of solutions. A
//! quintic is drawn from that space with a seeded random integer
//! combination, redrawn while it contains the conic or is singular at a
//! marked point.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::map::{collinear_p10, points_rank, veronese3};
use super::point::ProjectivePoint;
use super::singular::{singular_points_search, smooth_at, SingularLocus, SingularMode};
use crate::arith::{json_bigint, json_rational, Rational};
use crate::error::{Error, Result};
use crate::linalg;
use crate::ns_calculus::{sym_degree, SymmetricProductSpace};
use crate::poly::{monomial_basis, BinaryForm, HomogeneousForm, UniPoly};

/// Seed whose quintic ships with a stored elimination-mode smoothness certificate.
pub const DEFAULT_SEED: u64 = 1;

const QUINTIC: u32 = 5;
const MAX_ATTEMPTS: u64 = 64;
const COMBINATION_RANGE: i64 = 9;

/// A map `P^1 -> P^2`, `(s:t) |-> (f0 : f1 : f2)`, by three binary quadrics
/// spanning the space of quadrics, so that the image is a smooth conic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicParametrization {
    forms: [BinaryForm; 3],
}

impl ConicParametrization {
    pub fn new(forms: [BinaryForm; 3]) -> Result<Self> {
        if forms.iter().any(|f| f.degree() != 2) {
            return Err(Error::domain("conic parametrization needs binary quadrics"));
        }
        let rows: Vec<Vec<Rational>> = forms.iter().map(|f| f.coeffs().to_vec()).collect();
        if linalg::rank(&rows) != 3 {
            return Err(Error::domain(
                "quadrics are linearly dependent: image is not a smooth conic",
            ));
        }
        // Independence already rules this out; checked for the record.
        let at_infinity = forms.iter().all(|f| f.coeffs()[2].is_zero());
        let finite = forms
            .iter()
            .map(|f| UniPoly::new(f.coeffs().to_vec()))
            .fold(UniPoly::zero(), |acc, p| acc.gcd(&p));
        if at_infinity || finite.degree().unwrap_or(0) > 0 {
            return Err(Error::domain("quadrics share a root"));
        }
        Ok(Self { forms })
    }

    /// `(s:t) |-> (s^2 : st : t^2)`, with image `XZ = Y^2`.
    pub fn standard() -> Self {
        let e = |k: usize| {
            let mut c = vec![Rational::zero(); 3];
            c[k] = Rational::one();
            BinaryForm::new(c)
        };
        Self::new([e(0), e(1), e(2)]).expect("standard conic")
    }

    pub fn forms(&self) -> &[BinaryForm; 3] {
        &self.forms
    }

    pub fn point(&self, param: &ProjectivePoint) -> Result<ProjectivePoint> {
        param.expect_dim(1)?;
        let r = param.representative();
        let coords: Vec<Rational> = self.forms.iter().map(|f| f.eval(&r[0], &r[1])).collect();
        ProjectivePoint::from_rationals(&coords)
    }

    /// `F(f0, f1, f2)`, a binary form of degree `2 deg F`.
    pub fn pullback(&self, form: &HomogeneousForm) -> BinaryForm {
        let deg = form.degree() as usize;
        let powers: Vec<Vec<BinaryForm>> = self
            .forms
            .iter()
            .map(|f| {
                let mut ps = vec![BinaryForm::new(vec![Rational::one()])];
                for k in 1..=deg {
                    let next = ps[k - 1].mul(f);
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut out = vec![Rational::zero(); 2 * deg + 1];
        for (e, c) in form.terms() {
            let t = powers[0][e[0] as usize]
                .mul(&powers[1][e[1] as usize])
                .mul(&powers[2][e[2] as usize]);
            for (o, x) in out.iter_mut().zip(t.coeffs()) {
                *o += c * x;
            }
        }
        BinaryForm::new(out)
    }

    /// The conic's equation, unique up to scale.
    pub fn implicit_equation(&self) -> HomogeneousForm {
        let basis = monomial_basis(2);
        let columns: Vec<BinaryForm> = basis
            .iter()
            .map(|e| self.pullback(&HomogeneousForm::from_terms(2, [(*e, Rational::one())]).unwrap()))
            .collect();
        let rows: Vec<Vec<Rational>> = (0..5)
            .map(|k| columns.iter().map(|c| c.coeffs()[k].clone()).collect())
            .collect();
        let ker = linalg::nullspace(&rows, basis.len());
        debug_assert_eq!(ker.len(), 1);
        HomogeneousForm::from_basis_coefficients(2, &ker[0]).expect("six coefficients")
    }
}

/// The outcome of [`construct_quintic`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuinticConstruction {
    pub seed: u64,
    /// Number of redraws before an acceptable quintic was found.
    pub attempt: u64,
    /// Parameters `p1, p2, p3, q` on `P^1`.
    pub parameters: Vec<ProjectivePoint>,
    /// Their images on the conic.
    pub marked_points: Vec<ProjectivePoint>,
    pub condition_rank: usize,
    pub nullity: usize,
    pub quintic: HomogeneousForm,
    /// `c` with `pullback = c * L_p1^3 L_p2^3 L_p3^3 L_q`.
    #[serde(with = "json_rational")]
    pub pullback_scale: Rational,
    /// The conic meets the quintic outside `3(p1+p2+p3)` only at this point, simply.
    pub residual_point: ProjectivePoint,
}

pub fn default_parameters() -> [ProjectivePoint; 4] {
    [[1, 0], [0, 1], [1, 1], [1, 2]].map(|c| ProjectivePoint::from_i64(&c).expect("nonzero"))
}

/// Constructs a quintic through `par(p_i)` with contact order 3 there and
/// through `par(q)`, drawn from the solution space with `seed`.
pub fn construct_quintic(
    par: &ConicParametrization,
    params: &[ProjectivePoint; 4],
    seed: u64,
) -> Result<QuinticConstruction> {
    for p in params {
        p.expect_dim(1)?;
    }
    for i in 0..4 {
        for j in 0..i {
            if params[i] == params[j] {
                return Err(Error::domain(format!(
                    "parameters {} and {} coincide at {}",
                    j + 1,
                    i + 1,
                    params[i]
                )));
            }
        }
    }
    let basis = monomial_basis(QUINTIC);
    let target_deg = 2 * QUINTIC as usize;

    // Pullback matrix: column j is the pullback of the j-th quintic monomial.
    let columns: Vec<BinaryForm> = basis
        .iter()
        .map(|e| par.pullback(&HomogeneousForm::from_terms(QUINTIC, [(*e, Rational::one())]).unwrap()))
        .collect();

    let orders = [3usize, 3, 3, 1];
    let mut conditions: Vec<Vec<Rational>> = Vec::new();
    for (p, &ord) in params.iter().zip(&orders) {
        let r = p.representative();
        for functional in BinaryForm::vanishing_conditions(target_deg, &r[0], &r[1], ord) {
            conditions.push(
                columns
                    .iter()
                    .map(|col| {
                        functional
                            .iter()
                            .zip(col.coeffs())
                            .map(|(a, b)| a * b)
                            .sum()
                    })
                    .collect(),
            );
        }
    }
    let condition_rank = linalg::rank(&conditions);
    let kernel: Vec<Vec<BigInt>> = linalg::nullspace(&conditions, basis.len())
        .iter()
        .map(|v| primitive(v))
        .collect();
    let nullity = kernel.len();
    if nullity < basis.len() - conditions.len() || nullity == 0 {
        return Err(Error::internal(format!(
            "solution space has dimension {nullity}, below the count {}",
            basis.len() - conditions.len()
        )));
    }

    let target = expected_pullback(params)?;
    let marked_points = params
        .iter()
        .map(|p| par.point(p))
        .collect::<Result<Vec<_>>>()?;

    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        let mut coeffs = vec![BigInt::zero(); basis.len()];
        for v in &kernel {
            let lambda = BigInt::from(rng.gen_range(-COMBINATION_RANGE..=COMBINATION_RANGE));
            for (c, x) in coeffs.iter_mut().zip(v) {
                *c += &lambda * x;
            }
        }
        let coeffs = primitive(
            &coeffs
                .into_iter()
                .map(Rational::from_integer)
                .collect::<Vec<_>>(),
        );
        if coeffs.iter().all(Zero::is_zero) {
            continue;
        }
        let quintic = HomogeneousForm::from_basis_coefficients(
            QUINTIC,
            &coeffs.into_iter().map(Rational::from_integer).collect::<Vec<_>>(),
        )?;
        let pulled = par.pullback(&quintic);
        let Some(scale) = proportionality(&pulled, &target) else {
            return Err(Error::internal(
                "pullback is not proportional to the prescribed divisor",
            ));
        };
        if scale.is_zero() {
            // The quintic contains the conic.
            continue;
        }
        let mut smooth = true;
        for x in &marked_points {
            smooth &= smooth_at(&quintic, x)?;
        }
        if !smooth {
            continue;
        }
        return Ok(QuinticConstruction {
            seed,
            attempt,
            parameters: params.to_vec(),
            residual_point: marked_points[3].clone(),
            marked_points,
            condition_rank,
            nullity,
            quintic,
            pullback_scale: scale,
        });
    }
    Err(Error::internal(format!(
        "no acceptable quintic in {MAX_ATTEMPTS} draws from seed {seed}"
    )))
}

/// `L_p1^3 L_p2^3 L_p3^3 L_q`.
fn expected_pullback(params: &[ProjectivePoint; 4]) -> Result<BinaryForm> {
    let line = |p: &ProjectivePoint| {
        let r = p.representative();
        BinaryForm::vanishing_at(&r[0], &r[1])
    };
    Ok(line(&params[0])
        .pow(3)
        .mul(&line(&params[1]).pow(3))
        .mul(&line(&params[2]).pow(3))
        .mul(&line(&params[3])))
}

/// `Some(c)` with `f = c g`, for nonzero `g`.
fn proportionality(f: &BinaryForm, g: &BinaryForm) -> Option<Rational> {
    let k = g.coeffs().iter().position(|c| !c.is_zero())?;
    let c = &f.coeffs()[k] / &g.coeffs()[k];
    (f == &g.scale(&c)).then_some(c)
}

fn primitive(v: &[Rational]) -> Vec<BigInt> {
    match ProjectivePoint::from_rationals(v) {
        Ok(p) => p.coords().to_vec(),
        Err(_) => vec![BigInt::zero(); v.len()],
    }
}

/// Machine-readable record of a successful noncollinearity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuinticCertificate {
    pub stages: Vec<&'static str>,
    pub construction: QuinticConstruction,
    /// Residual factor after dividing the pullback by `L_p1^3 L_p2^3 L_p3^3`.
    pub residual_factor: Vec<String>,
    pub marked_points_on_curve: bool,
    pub marked_points_smooth: bool,
    pub veronese_points: Vec<ProjectivePoint>,
    pub veronese_rank: usize,
    pub collinear: bool,
    /// `(L(3)^s)^3` for `L = O_C(1)` on a plane quintic.
    #[serde(with = "json_bigint")]
    pub target_degree: BigInt,
    pub singular_locus: Option<SingularLocus>,
}

/// Runs the whole check on the standard conic with the default parameters.
pub fn verify_quintic_noncollinearity(seed: u64) -> Result<QuinticCertificate> {
    verify_with(&ConicParametrization::standard(), &default_parameters(), seed, false)
}

/// Construct, check incidences and smoothness at the marked points, embed
/// `3 p_i` by the cubic Veronese map and verify rank 3. With `certify`, the
/// full singular locus is eliminated as well.
pub fn verify_with(
    par: &ConicParametrization,
    params: &[ProjectivePoint; 4],
    seed: u64,
    certify: bool,
) -> Result<QuinticCertificate> {
    let mut stages = Vec::new();
    for p in params {
        p.expect_dim(1).map_err(|e| e.in_stage("precondition"))?;
    }
    if params.iter().enumerate().any(|(i, p)| params[..i].contains(p)) {
        return Err(Error::domain("marked parameters must be distinct").in_stage("precondition"));
    }
    stages.push("precondition");

    let construction = construct_quintic(par, params, seed).map_err(|e| e.in_stage("construct"))?;
    stages.push("construct");

    let pulled = par.pullback(&construction.quintic);
    let triple_part = expected_pullback(params)
        .map_err(|e| e.in_stage("pullback"))?
        .exact_div(&{
            let r = params[3].representative();
            BinaryForm::vanishing_at(&r[0], &r[1])
        })
        .ok_or_else(|| Error::internal("prescribed divisor lost its q factor").in_stage("pullback"))?;
    let residual = pulled
        .exact_div(&triple_part)
        .ok_or_else(|| Error::internal("pullback not divisible by the triple points").in_stage("pullback"))?;
    if residual.degree() != 1 || residual.is_zero() {
        return Err(Error::internal("residual intersection is not a single point").in_stage("pullback"));
    }
    let q_rep = params[3].representative();
    if !residual.eval(&q_rep[0], &q_rep[1]).is_zero() {
        return Err(Error::internal("residual point differs from q").in_stage("pullback"));
    }
    stages.push("pullback");

    let on_curve = construction
        .marked_points
        .iter()
        .all(|x| construction.quintic.eval(&x.representative()).is_zero());
    if !on_curve {
        return Err(Error::internal("marked point off the quintic").in_stage("incidence"));
    }
    stages.push("incidence");

    let mut smooth = true;
    for x in &construction.marked_points {
        smooth &= smooth_at(&construction.quintic, x).map_err(|e| e.in_stage("smoothness"))?;
    }
    if !smooth {
        return Err(Error::internal("quintic singular at a marked point").in_stage("smoothness"));
    }
    stages.push("smoothness");

    let singular_locus = if certify {
        let loc = singular_points_search(&construction.quintic, SingularMode::Eliminate)
            .map_err(|e| e.in_stage("eliminate"))?;
        if !loc.certifies_smooth() {
            return Err(Error::internal(format!(
                "quintic has singular points: {} rational, {} unresolved",
                loc.points.len(),
                loc.unresolved
            ))
            .in_stage("eliminate"));
        }
        stages.push("eliminate");
        Some(loc)
    } else {
        None
    };

    let veronese_points = construction.marked_points[..3]
        .iter()
        .map(veronese3)
        .collect::<Result<Vec<_>>>()
        .map_err(|e| e.in_stage("veronese"))?;
    stages.push("veronese");

    let veronese_rank = points_rank(&veronese_points).map_err(|e| e.in_stage("collinearity"))?;
    let collinear = collinear_p10(&veronese_points[0], &veronese_points[1], &veronese_points[2])
        .map_err(|e| e.in_stage("collinearity"))?;
    if collinear {
        return Err(Error::internal("Veronese points are collinear").in_stage("collinearity"));
    }
    stages.push("collinearity");

    let target_degree = sym_degree(
        SymmetricProductSpace::new(6, 3).map_err(|e| e.in_stage("degree"))?,
        QUINTIC as i64,
    );
    stages.push("degree");

    Ok(QuinticCertificate {
        stages,
        residual_factor: residual.coeffs().iter().map(crate::arith::render_rational).collect(),
        construction,
        marked_points_on_curve: on_curve,
        marked_points_smooth: smooth,
        veronese_points,
        veronese_rank,
        collinear,
        target_degree,
        singular_locus,
    })
}
