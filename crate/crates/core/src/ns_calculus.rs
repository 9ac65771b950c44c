//! Intersection calculus on the sublattice `Z<xi, theta>` of the
//! Néron–Severi group of the symmetric product `C(n)` of a genus-`g` curve.
//!
//! `xi` is the class of the divisor of all `D` containing a fixed point and
//! `theta` is the pull-back of a theta divisor along an Abel–Jacobi map.
//! Top intersections of monomials follow Poincaré's formula
//!
//! ```text
//! xi^i . theta^(n-i) = g! / (g - n + i)!        (0 <= i <= n)
//! ```
//!
//! and vanish when `n - i > g`, since `theta` comes from the `g`-dimensional
//! Jacobian. When `End(J(C))` is larger than `Z` the group `NS(C(n))` may have
//! classes outside this lattice; they are not modelled.
//!
//! Degrees are returned as they are, including zero or negative values for
//! classes that cannot be ample.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::json_bigint;
use crate::error::{Error, Result};

/// The pair `(g, n)`: genus of the curve and order of the symmetric product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetricProductSpace {
    g: u32,
    n: u32,
}

impl SymmetricProductSpace {
    pub fn new(g: u32, n: u32) -> Result<Self> {
        if g < 1 || n < 1 {
            return Err(Error::domain(format!(
                "symmetric product needs g >= 1 and n >= 1, got g={g}, n={n}"
            )));
        }
        Ok(Self { g, n })
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn order(&self) -> u32 {
        self.n
    }
}

/// The class `xi_coeff * xi + theta_coeff * theta` on a fixed `C(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    #[serde(flatten)]
    space: SymmetricProductSpace,
    #[serde(with = "json_bigint")]
    xi: BigInt,
    #[serde(with = "json_bigint")]
    theta: BigInt,
}

impl DivisorClass {
    pub fn new(space: SymmetricProductSpace, xi: impl Into<BigInt>, theta: impl Into<BigInt>) -> Self {
        Self {
            space,
            xi: xi.into(),
            theta: theta.into(),
        }
    }

    pub fn space(&self) -> SymmetricProductSpace {
        self.space
    }

    pub fn xi_coeff(&self) -> &BigInt {
        &self.xi
    }

    pub fn theta_coeff(&self) -> &BigInt {
        &self.theta
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(Self::new(self.space, &self.xi + &other.xi, &self.theta + &other.theta))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(Self::new(self.space, &self.xi - &other.xi, &self.theta - &other.theta))
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        Self::new(self.space, &self.xi * &k, &self.theta * &k)
    }

    /// Top self-intersection `D^n`.
    pub fn self_intersection(&self) -> BigInt {
        let copies = vec![self.clone(); self.space.n as usize];
        top_intersection(&copies).expect("copies share one space and have arity n")
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::domain(format!(
                "classes live on different symmetric products: {:?} vs {:?}",
                self.space, other.space
            )));
        }
        Ok(())
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*xi + {}*theta", self.xi, self.theta)
    }
}

/// `g! / (g - n + i)!` as a falling factorial, or zero past the Jacobian's dimension.
fn poincare_weight(g: u32, n: u32, i: u32) -> BigInt {
    let theta_power = n - i;
    if theta_power > g {
        return BigInt::zero();
    }
    (0..theta_power).fold(BigInt::one(), |acc, k| acc * BigInt::from(g - k))
}

/// `xi^i . theta^(n-i)` on `C(n)`.
pub fn monomial_intersection(space: SymmetricProductSpace, i: u32) -> Result<BigInt> {
    if i > space.n {
        return Err(Error::domain(format!(
            "monomial index {i} outside 0..={}",
            space.n
        )));
    }
    Ok(poincare_weight(space.g, space.n, i))
}

/// Intersection number of `n` classes on `C(n)`, expanded multilinearly.
///
/// The coefficients of `prod_k (a_k x + b_k)` group the `2^n` choices of a
/// `xi`- or `theta`-factor by the number `i` of `xi`s picked.
pub fn top_intersection(classes: &[DivisorClass]) -> Result<BigInt> {
    let Some(first) = classes.first() else {
        return Err(Error::domain("top intersection of an empty list"));
    };
    let space = first.space;
    if classes.len() != space.n as usize {
        return Err(Error::domain(format!(
            "C({}) needs exactly {} classes, got {}",
            space.n,
            space.n,
            classes.len()
        )));
    }
    let mut by_xi_count = vec![BigInt::one()];
    for c in classes {
        first.same_space(c)?;
        let mut next = vec![BigInt::zero(); by_xi_count.len() + 1];
        for (i, v) in by_xi_count.iter().enumerate() {
            next[i] += v * &c.theta;
            next[i + 1] += v * &c.xi;
        }
        by_xi_count = next;
    }
    Ok(by_xi_count
        .iter()
        .enumerate()
        .map(|(i, v)| v * poincare_weight(space.g, space.n, i as u32))
        .sum())
}

/// Half the diagonal: `delta = (n + g - 1) xi - theta`.
pub fn delta_class(space: SymmetricProductSpace) -> DivisorClass {
    DivisorClass::new(space, space.n as i64 + space.g as i64 - 1, -1)
}

/// Class of the symmetrization `L(n)^s` of a degree-`d` line bundle: `d xi`.
pub fn sym_class(space: SymmetricProductSpace, d: i64) -> DivisorClass {
    DivisorClass::new(space, d, 0)
}

/// Class of the anti-symmetrization `L(n)^a`: `(d - g - n + 1) xi + theta`,
/// which equals `d xi - delta`.
pub fn alt_class(space: SymmetricProductSpace, d: i64) -> DivisorClass {
    DivisorClass::new(space, excess(space, d), 1)
}

/// Canonical class of `C(n)`: the anti-symmetrization of `K_C`.
pub fn canonical_class(space: SymmetricProductSpace) -> DivisorClass {
    alt_class(space, 2 * space.g as i64 - 2)
}

/// `(L(n)^s)^n = d^n`.
pub fn sym_degree(space: SymmetricProductSpace, d: i64) -> BigInt {
    num_traits::pow(BigInt::from(d), space.n as usize)
}

/// `(L(n)^a)^n = sum_i C(n,i) g!/(g-n+i)! (d-g-n+1)^i`.
pub fn alt_degree(space: SymmetricProductSpace, d: i64) -> BigInt {
    let e = BigInt::from(excess(space, d));
    let mut binom = BigInt::one();
    let mut e_pow = BigInt::one();
    let mut total = BigInt::zero();
    for i in 0..=space.n {
        total += &binom * poincare_weight(space.g, space.n, i) * &e_pow;
        binom = binom * BigInt::from(space.n - i) / BigInt::from(i + 1);
        e_pow *= &e;
    }
    total
}

/// `(L(3)^a)^3` on `C(3)` in the expanded cubic form
/// `g(g-1)(g-2) + 3g(g-1)e + 3g e^2 + e^3` with `e = d - g - 2`.
///
/// For `g < 3` the general sum [`alt_degree`] is used.
pub fn alt_degree_n3(g: u32, d: i64) -> Result<BigInt> {
    let space = SymmetricProductSpace::new(g, 3)?;
    if g < 3 {
        return Ok(alt_degree(space, d));
    }
    let g = BigInt::from(g);
    let e = BigInt::from(d) - &g - 2;
    let one = BigInt::one();
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    Ok(&g * (&g - &one) * (&g - &two)
        + &three * &g * (&g - &one) * &e
        + &three * &g * &e * &e
        + &e * &e * &e)
}

fn excess(space: SymmetricProductSpace, d: i64) -> i64 {
    d - space.g as i64 - space.n as i64 + 1
}
