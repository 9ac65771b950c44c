use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use symprod_core::arith::Rational;
use symprod_core::embedding::{collinear_p10, phi3, veronese3, Divisor3, ProjectivePoint};
use symprod_core::linear_series::{
    castelnuovo_genus_bound, clifford_max_r, max_r_degree9, min_alt_embedding_degree_search,
    min_alt_embedding_degree_search_with_workers, riemann_roch_residual, CurveClass,
};
use symprod_core::ns_calculus::{
    alt_class, canonical_class, monomial_intersection, top_intersection, DivisorClass, SymmetricProductSpace,
};

fn point3() -> impl Strategy<Value = ProjectivePoint> {
    prop::array::uniform3(-12i64..=12)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| ProjectivePoint::from_i64(&c).unwrap())
}

fn point10() -> impl Strategy<Value = ProjectivePoint> {
    prop::collection::vec(-6i64..=6, 10)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| ProjectivePoint::from_i64(&c).unwrap())
}

fn rescale(p: &ProjectivePoint, num: i64, den: i64) -> ProjectivePoint {
    let k = Rational::new(BigInt::from(num), BigInt::from(den));
    let coords: Vec<Rational> = p.representative().iter().map(|c| c * &k).collect();
    ProjectivePoint::from_rationals(&coords).unwrap()
}

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-9i64..=-1, 1i64..=9]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn diagonal_of_phi3_is_veronese(x in point3()) {
        let d = Divisor3::triple(x.clone()).unwrap();
        prop_assert_eq!(phi3(&d), veronese3(&x).unwrap());
    }
}

proptest! {
    #[test]
    fn phi3_is_projectively_well_defined(
        a in point3(), b in point3(), c in point3(),
        k1 in nonzero(), k2 in nonzero(), k3 in 1i64..=5,
    ) {
        let d = Divisor3::new(a.clone(), b.clone(), c.clone()).unwrap();
        let permuted = Divisor3::new(c.clone(), a.clone(), b.clone()).unwrap();
        let scaled = Divisor3::new(rescale(&a, k1, 1), rescale(&b, 1, k3), rescale(&c, k2, k3)).unwrap();
        prop_assert_eq!(phi3(&d), phi3(&permuted));
        prop_assert_eq!(phi3(&d), phi3(&scaled));
    }

    #[test]
    fn collinearity_ignores_rescaling(
        p in point10(), q in point10(), r in point10(),
        k1 in nonzero(), k2 in nonzero(), k3 in 1i64..=7,
    ) {
        let before = collinear_p10(&p, &q, &r).unwrap();
        let after = collinear_p10(&rescale(&p, k1, k3), &rescale(&q, k2, 1), &rescale(&r, -1, k3)).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn top_intersection_is_symmetric(
        g in 1u32..=12, coeffs in prop::collection::vec((-10i64..=10, -10i64..=10), 1..=5),
        rot in 0usize..5,
    ) {
        let space = SymmetricProductSpace::new(g, coeffs.len() as u32).unwrap();
        let classes: Vec<DivisorClass> = coeffs.iter().map(|&(a, b)| DivisorClass::new(space, a, b)).collect();
        let mut turned = classes.clone();
        turned.rotate_left(rot % classes.len());
        let mut reversed = classes.clone();
        reversed.reverse();
        let v = top_intersection(&classes).unwrap();
        prop_assert_eq!(&v, &top_intersection(&turned).unwrap());
        prop_assert_eq!(&v, &top_intersection(&reversed).unwrap());
    }

    #[test]
    fn search_is_independent_of_workers(g_max in 5u32..=9, extra in 3u32..=12, workers in 1usize..=6) {
        let d_max = g_max + extra;
        let serial = min_alt_embedding_degree_search(5, g_max, d_max).unwrap();
        let parallel = min_alt_embedding_degree_search_with_workers(5, g_max, d_max, workers).unwrap();
        prop_assert_eq!(serial, parallel);
    }
}

#[test]
fn xi_to_the_n_is_one() {
    for g in 1..=20 {
        for n in 1..=8 {
            let space = SymmetricProductSpace::new(g, n).unwrap();
            assert!(monomial_intersection(space, n).unwrap().is_one());
        }
    }
}

#[test]
fn canonical_class_is_alt_of_canonical_degree() {
    for g in 1..=12u32 {
        for n in 1..=12u32 {
            let space = SymmetricProductSpace::new(g, n).unwrap();
            assert_eq!(canonical_class(space), alt_class(space, 2 * g as i64 - 2));
        }
    }
}

#[test]
fn clifford_half_integer_discipline() {
    for d in 0..=30i64 {
        let strict = clifford_max_r(d, true);
        let loose = clifford_max_r(d, false);
        // strict < d/2 <= loose + 1, doubled to stay in integers
        assert!(2 * strict < d, "d={d}");
        assert!(d <= 2 * (loose + 1), "d={d}");
        assert!(2 * loose <= d);
    }
}

#[test]
fn nonspecial_series_have_no_residual() {
    for g in 0..=20 {
        for d in 0..=40 {
            assert_eq!(riemann_roch_residual(g, d, d - g), 0);
        }
    }
}

#[test]
fn castelnuovo_is_monotone_in_degree() {
    for r in 2..=8 {
        let mut prev = castelnuovo_genus_bound(r, r).unwrap();
        assert_eq!(prev, 0);
        for d in r + 1..=40 {
            let next = castelnuovo_genus_bound(d, r).unwrap();
            assert!(next >= prev, "d={d} r={r}");
            prev = next;
        }
    }
}

#[test]
fn degree9_bound_respects_clifford_and_riemann_roch() {
    for g in 5..=12u32 {
        for (h, t) in [(false, false), (true, false), (false, true)] {
            let curve = CurveClass::new(g, h, t).unwrap();
            let r = max_r_degree9(curve).unwrap();
            assert!(r <= clifford_max_r(9, !h).max(9 - g as i64), "g={g} h={h} t={t}");
            assert!(r <= 4);
            assert!(riemann_roch_residual(g as i64, 9, r) >= 0);
        }
    }
}

#[test]
fn empty_divisor_class_degrees() {
    let space = SymmetricProductSpace::new(4, 3).unwrap();
    let zero = DivisorClass::new(space, 0, 0);
    assert!(top_intersection(&[zero.clone(), zero.clone(), zero]).unwrap().is_zero());
}
