//! Dimension bounds for linear series `g^r_d` on a curve of genus `g`, and the
//! grid search showing that anti-symmetrized embeddings of `C(3)` have degree
//! above 125 on curves that are neither hyperelliptic nor trigonal.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::json_bigint;
use crate::error::{Error, Result};
use crate::ns_calculus::{alt_degree_n3, sym_degree, SymmetricProductSpace};

/// Genus plus the gonality flags the bounds depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClass {
    pub g: u32,
    pub is_hyperelliptic: bool,
    pub is_trigonal: bool,
}

impl CurveClass {
    pub fn new(g: u32, is_hyperelliptic: bool, is_trigonal: bool) -> Result<Self> {
        if g >= 3 && is_hyperelliptic && is_trigonal {
            return Err(Error::domain(format!(
                "a genus {g} curve cannot be flagged both hyperelliptic and trigonal"
            )));
        }
        Ok(Self {
            g,
            is_hyperelliptic,
            is_trigonal,
        })
    }

    /// Neither hyperelliptic nor trigonal.
    pub fn general(g: u32) -> Self {
        Self {
            g,
            is_hyperelliptic: false,
            is_trigonal: false,
        }
    }

    /// Smallest gonality compatible with the flags.
    fn min_gonality(&self) -> i64 {
        if self.is_hyperelliptic {
            2
        } else if self.is_trigonal {
            3
        } else {
            4
        }
    }
}

/// A linear series `g^r_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesSpec {
    pub d: u32,
    pub r: u32,
}

impl SeriesSpec {
    pub fn new(d: u32, r: u32) -> Self {
        Self { d, r }
    }

    /// `h^0(K - D)` for a member `D` on a genus-`g` curve.
    pub fn residual_h0(&self, g: u32) -> i64 {
        riemann_roch_residual(g as i64, self.d as i64, self.r as i64)
    }

    pub fn is_special(&self, g: u32) -> bool {
        self.residual_h0(g) > 0
    }
}

/// `h^0(D) = d - g + 1` for a non-special divisor of degree `d`.
pub fn h0_nonspecial(g: i64, d: i64) -> i64 {
    d - g + 1
}

/// `h^0(K - D) = r - d + g` by Riemann–Roch. A negative value means no
/// `g^r_d` exists on a genus-`g` curve.
pub fn riemann_roch_residual(g: i64, d: i64, r: i64) -> i64 {
    r - d + g
}

/// Clifford bound for a special series of degree `d`: `r <= d/2`, or the
/// largest `r < d/2` in strict mode.
pub fn clifford_max_r(d: i64, strict: bool) -> i64 {
    if strict {
        (d - 1).div_euclid(2)
    } else {
        d.div_euclid(2)
    }
}

/// Castelnuovo's bound `pi(d, r)` on the genus of a non-degenerate
/// irreducible curve of degree `d` in `P^r`.
pub fn castelnuovo_genus_bound(d: i64, r: i64) -> Result<i64> {
    if r < 2 || d < r {
        return Err(Error::domain(format!(
            "Castelnuovo bound needs r >= 2 and d >= r, got d={d}, r={r}"
        )));
    }
    let m = (d - 1) / (r - 1);
    let eps = d - 1 - m * (r - 1);
    Ok(m * (m - 1) / 2 * (r - 1) + m * eps)
}

/// Bound on `r` for series `g^r_9`, with the chain of reasoning that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degree9Bound {
    pub curve: CurveClass,
    pub max_r: i64,
    pub steps: Vec<String>,
}

const NINE: i64 = 9;

/// Largest possible `r` of a `g^r_9` on a curve of genus at least 5.
pub fn max_r_degree9(curve: CurveClass) -> Result<i64> {
    Ok(degree9_bound(curve)?.max_r)
}

pub fn degree9_bound(curve: CurveClass) -> Result<Degree9Bound> {
    let g = curve.g as i64;
    if g < 5 {
        return Err(Error::domain(format!("degree-9 bound needs g >= 5, got {g}")));
    }
    let mut steps = Vec::new();

    let nonspecial_r = h0_nonspecial(g, NINE) - 1;
    steps.push(format!("non-special: r = h0 - 1 = {nonspecial_r}"));

    let canonical_degree = 2 * g - 2;
    let special_r = if NINE <= canonical_degree {
        let r = clifford_max_r(NINE, !curve.is_hyperelliptic);
        steps.push(format!("special: Clifford gives r <= {r}"));
        Some(r)
    } else {
        steps.push(format!("special: impossible since 9 > 2g - 2 = {canonical_degree}"));
        None
    };

    let mut max_r = nonspecial_r.max(special_r.unwrap_or(i64::MIN));

    // Try to rule out the top value of the special branch.
    if let Some(r) = special_r.filter(|&r| r == max_r && r > nonspecial_r) {
        if exclude_special_series(curve, NINE, r, &mut steps)? {
            max_r = (r - 1).max(nonspecial_r);
        }
    }
    steps.push(format!("max r = {max_r}"));
    Ok(Degree9Bound {
        curve,
        max_r,
        steps,
    })
}

/// Whether a special `g^r_d` (with `r` at the Clifford limit) is impossible
/// on `curve`. Appends the reasoning to `steps`.
fn exclude_special_series(
    curve: CurveClass,
    d: i64,
    r: i64,
    steps: &mut Vec<String>,
) -> Result<bool> {
    let g = curve.g as i64;
    if curve.is_hyperelliptic {
        steps.push("hyperelliptic: no refinement".into());
        return Ok(false);
    }
    // A base point leaves a special g^r_(d-1); strict Clifford forbids it.
    let strict = clifford_max_r(d - 1, true);
    if r > strict {
        steps.push(format!(
            "base point would leave g^{r}_{} but strict Clifford gives r <= {strict}",
            d - 1
        ));
    } else {
        steps.push(format!("base points not excluded for g^{r}_{d}"));
        return Ok(false);
    }
    // Base-point-free: the image is non-degenerate in P^r, hence of degree >= r;
    // a map of degree k > 1 would need an image of degree d/k >= r.
    let composite = (2..=d).any(|k| d % k == 0 && d / k >= r);
    if composite {
        steps.push("map may fail to be birational".into());
        return Ok(false);
    }
    let pi = castelnuovo_genus_bound(d, r)?;
    if g > pi {
        steps.push(format!("birational onto a degree-{d} curve in P^{r}: Castelnuovo gives g <= {pi} < {g}"));
        return Ok(true);
    }
    steps.push(format!("Castelnuovo allows g <= {pi}"));
    // Residual series |K - D| is a g^(h-1)_(2g-2-d).
    let h = riemann_roch_residual(g, d, r);
    let res_deg = 2 * g - 2 - d;
    let res_dim = h - 1;
    if res_dim >= 1 {
        // Subtracting res_dim - 1 general points leaves a pencil.
        let pencil_degree = res_deg - (res_dim - 1);
        if res_dim == 1 {
            steps.push(format!("residual |K - D| is a g^1_{res_deg}"));
        } else {
            steps.push(format!(
                "residual |K - D| is a g^{res_dim}_{res_deg}, giving a g^1_{pencil_degree}"
            ));
        }
        if pencil_degree < curve.min_gonality() {
            steps.push(format!(
                "a g^1_{pencil_degree} contradicts the gonality assumptions"
            ));
            return Ok(true);
        }
    } else {
        steps.push(format!("residual |K - D| has h0 = {h}: no pencil"));
    }
    Ok(false)
}

/// One `(g, d)` pair of the search grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub g: u32,
    pub d: u32,
    #[serde(with = "json_bigint")]
    pub alt_degree: BigInt,
    /// Largest dimension of a complete series of degree `d` allowed by
    /// Riemann–Roch and Clifford on a curve that is neither hyperelliptic
    /// nor trigonal.
    pub max_r: i64,
    /// `None` when the pair survives.
    pub exclusion: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinDegreeConclusion {
    /// No admissible pair has degree at most the threshold.
    AllExceed {
        #[serde(with = "json_bigint")]
        threshold: BigInt,
    },
    /// Smallest degree among surviving pairs.
    Attained {
        #[serde(with = "json_bigint")]
        degree: BigInt,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub g_min: u32,
    pub g_max: u32,
    pub d_max: u32,
    #[serde(with = "json_bigint")]
    pub threshold: BigInt,
    pub candidates: Vec<Candidate>,
    pub surviving: Vec<(u32, u32)>,
    pub min_degree_conclusion: MinDegreeConclusion,
}

/// Minimal dimension of `|L|` needed for `L(3)^a` to be very ample: no
/// 4-secant plane forces `dim |L| >= 4`.
pub const REQUIRED_DIMENSION: i64 = 4;

/// Extra degrees above `g_max` scanned by default. Past `e = d - g - 2 >= 2`
/// the cubic degree already exceeds 125 when `g >= 5`.
pub const DEFAULT_D_MARGIN: u32 = 10;

/// The degree to beat: `(L(3)^s)^3` for a plane quintic.
pub fn target_degree() -> BigInt {
    sym_degree(SymmetricProductSpace::new(6, 3).expect("valid space"), 5)
}

fn check_pair(g: u32, d: u32, threshold: &BigInt) -> Result<Option<Candidate>> {
    let value = alt_degree_n3(g, d as i64)?;
    if &value > threshold {
        return Ok(None);
    }
    let (gi, di) = (g as i64, d as i64);
    let nonspecial_r = h0_nonspecial(gi, di) - 1;
    let canonical = di == 2 * gi - 2;
    let special_r = if di > 2 * gi - 2 {
        None
    } else if canonical {
        Some(gi - 1)
    } else if di == 0 {
        Some(0)
    } else {
        Some(clifford_max_r(di, true))
    };
    let max_r = nonspecial_r.max(special_r.unwrap_or(-1)).max(0);
    if riemann_roch_residual(gi, di, max_r) < 0 {
        return Err(Error::internal(format!("no series of degree {d} on genus {g}")));
    }
    let exclusion = if max_r >= REQUIRED_DIMENSION {
        None
    } else {
        let mut why = format!("need r >= {REQUIRED_DIMENSION}; non-special gives r = d - g = {nonspecial_r}");
        match special_r {
            None => why.push_str("; special impossible since d > 2g - 2"),
            Some(r) if canonical => why.push_str(&format!("; canonical gives r = {r}")),
            Some(r) => why.push_str(&format!("; special non-canonical: strict Clifford gives r <= {r}")),
        }
        Some(why)
    };
    Ok(Some(Candidate {
        g,
        d,
        alt_degree: value,
        max_r,
        exclusion,
    }))
}

/// Scans `g_min <= g <= g_max`, `1 <= d <= d_max` on one thread.
pub fn min_alt_embedding_degree_search(g_min: u32, g_max: u32, d_max: u32) -> Result<SearchReport> {
    min_alt_embedding_degree_search_with_workers(g_min, g_max, d_max, 1)
}

/// As [`min_alt_embedding_degree_search`], evaluating pairs on `workers`
/// threads. The report is merged in `(g, d)` order and does not depend on
/// the worker count.
pub fn min_alt_embedding_degree_search_with_workers(
    g_min: u32,
    g_max: u32,
    d_max: u32,
    workers: usize,
) -> Result<SearchReport> {
    if g_min < 5 || g_min > g_max {
        return Err(Error::domain(format!(
            "search needs 5 <= g_min <= g_max, got {g_min}..{g_max}"
        )));
    }
    if d_max < g_max + 3 {
        return Err(Error::domain(format!(
            "d_max must be at least g_max + 3 = {}, got {d_max}",
            g_max + 3
        )));
    }
    let threshold = target_degree();
    let pairs: Vec<(u32, u32)> = (g_min..=g_max)
        .flat_map(|g| (1..=d_max).map(move |d| (g, d)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::resource(format!("worker pool: {e}")))?;
    let results: Vec<Result<Option<Candidate>>> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(g, d)| check_pair(g, d, &threshold))
            .collect()
    });
    let mut candidates = Vec::new();
    for r in results {
        if let Some(c) = r? {
            candidates.push(c);
        }
    }
    let surviving: Vec<(u32, u32)> = candidates
        .iter()
        .filter(|c| c.exclusion.is_none())
        .map(|c| (c.g, c.d))
        .collect();
    let min_degree_conclusion = match candidates
        .iter()
        .filter(|c| c.exclusion.is_none())
        .map(|c| c.alt_degree.clone())
        .min()
    {
        None => MinDegreeConclusion::AllExceed {
            threshold: threshold.clone(),
        },
        Some(degree) => MinDegreeConclusion::Attained { degree },
    };
    Ok(SearchReport {
        g_min,
        g_max,
        d_max,
        threshold,
        candidates,
        surviving,
        min_degree_conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn riemann_roch_examples() {
        assert_eq!(h0_nonspecial(5, 9), 5);
        assert_eq!(h0_nonspecial(0, 0), 1);
        assert_eq!(h0_nonspecial(6, 9), 4);
        assert_eq!(riemann_roch_residual(6, 9, 4), 1);
        assert_eq!(riemann_roch_residual(5, 9, 4), 0);
        assert_eq!(riemann_roch_residual(7, 9, 3), 1);
        for g in 0..20 {
            for d in 0..40 {
                assert_eq!(riemann_roch_residual(g, d, d - g), 0);
            }
        }
        assert!(SeriesSpec::new(9, 4).is_special(6));
        assert!(!SeriesSpec::new(9, 4).is_special(5));
    }

    #[test]
    fn clifford_examples() {
        assert_eq!(clifford_max_r(9, false), 4);
        assert_eq!(clifford_max_r(8, true), 3);
        assert_eq!(clifford_max_r(0, false), 0);
        assert_eq!(clifford_max_r(9, true), 4);
        for d in 0..=30i64 {
            // strict < d/2 <= nonstrict + 1, in doubled integers
            assert!(2 * clifford_max_r(d, true) < d);
            assert!(d <= 2 * (clifford_max_r(d, false) + 1));
            assert!(2 * clifford_max_r(d, false) <= d);
            assert!(2 * (clifford_max_r(d, true) + 1) >= d);
        }
    }

    #[test]
    fn castelnuovo_examples() {
        assert_eq!(castelnuovo_genus_bound(9, 4).unwrap(), 7);
        assert_eq!(castelnuovo_genus_bound(10, 5).unwrap(), 6);
        for r in 2..10 {
            assert_eq!(castelnuovo_genus_bound(r, r).unwrap(), 0);
        }
        // plane curves: (d-1)(d-2)/2
        assert_eq!(castelnuovo_genus_bound(5, 2).unwrap(), 6);
        assert!(castelnuovo_genus_bound(9, 1).is_err());
        assert!(castelnuovo_genus_bound(3, 4).is_err());
        for r in 2..=8 {
            let mut prev = 0;
            for d in r..=40 {
                let pi = castelnuovo_genus_bound(d, r).unwrap();
                assert!(pi >= prev, "not monotone at d={d}, r={r}");
                prev = pi;
            }
        }
    }

    #[test]
    fn degree9_bounds() {
        for flags in [(false, false), (true, false), (false, true)] {
            let c = CurveClass::new(5, flags.0, flags.1).unwrap();
            assert_eq!(max_r_degree9(c).unwrap(), 4);
        }
        assert_eq!(max_r_degree9(CurveClass::general(6)).unwrap(), 4);
        assert_eq!(max_r_degree9(CurveClass::general(7)).unwrap(), 3);
        for g in 7..=12 {
            assert_eq!(max_r_degree9(CurveClass::general(g)).unwrap(), 3);
        }
        // gonality flags keep the weaker bound where the argument needs them
        assert_eq!(max_r_degree9(CurveClass::new(7, false, true).unwrap()).unwrap(), 4);
        assert_eq!(max_r_degree9(CurveClass::new(9, true, false).unwrap()).unwrap(), 4);
        assert!(max_r_degree9(CurveClass::general(4)).is_err());
        assert!(CurveClass::new(5, true, true).is_err());
    }

    #[test]
    fn degree9_never_exceeds_clifford() {
        for g in 5..=12 {
            for (h, t) in [(false, false), (true, false), (false, true)] {
                let c = CurveClass::new(g, h, t).unwrap();
                let r = max_r_degree9(c).unwrap();
                assert!(r <= clifford_max_r(9, !h));
                assert!(r <= (h0_nonspecial(g as i64, 9) - 1).max(4));
            }
        }
    }

    #[test]
    fn window_margin_is_sufficient() {
        for g in 5..=40u32 {
            for e in 2..=30i64 {
                let d = g as i64 + 2 + e;
                assert!(alt_degree_n3(g, d).unwrap() > target_degree(), "g={g} e={e}");
            }
        }
    }

    #[test]
    fn search_rejects_bad_ranges() {
        assert!(min_alt_embedding_degree_search(4, 8, 20).is_err());
        assert!(min_alt_embedding_degree_search(8, 5, 20).is_err());
        assert!(min_alt_embedding_degree_search(5, 8, 10).is_err());
    }

    #[test]
    fn search_is_partition_independent() {
        let a = min_alt_embedding_degree_search_with_workers(5, 9, 19, 1).unwrap();
        let b = min_alt_embedding_degree_search_with_workers(5, 9, 19, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
