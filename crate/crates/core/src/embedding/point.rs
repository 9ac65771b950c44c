use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::arith::{bigint_from_json, bigint_to_json, Rational};
use crate::error::{Error, Result};

/// Point of `P^k` with integer coordinates in canonical form: coprime
/// entries, first nonzero entry positive. Equal points have equal
/// coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    coords: Vec<BigInt>,
}

impl ProjectivePoint {
    pub fn from_integers(coords: Vec<BigInt>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::domain("a projective point needs at least two coordinates"));
        }
        let g = coords.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return Err(Error::domain("all coordinates are zero"));
        }
        let first_negative = coords
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_negative());
        let g = if first_negative { -g } else { g };
        Ok(Self {
            coords: coords.into_iter().map(|c| c / &g).collect(),
        })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        Self::from_integers(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_rationals(coords: &[Rational]) -> Result<Self> {
        let lcm = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let lcm = Rational::from_integer(lcm);
        Self::from_integers(coords.iter().map(|c| (c * &lcm).to_integer()).collect())
    }

    /// Dimension of the ambient projective space.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// The canonical integer representative as rationals.
    pub fn representative(&self) -> Vec<Rational> {
        self.coords
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect()
    }

    pub(crate) fn expect_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::domain(format!(
                "expected a point of P^{dim}, got one of P^{}",
                self.dim()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords
            .iter()
            .map(bigint_to_json)
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<serde_json::Value>::deserialize(d)?;
        let coords = raw
            .iter()
            .map(bigint_from_json)
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        ProjectivePoint::from_integers(coords).map_err(de::Error::custom)
    }
}

/// Effective divisor of degree 3 on a plane curve: an unordered triple of
/// points of `P^2`, repetitions allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Divisor3 {
    points: [ProjectivePoint; 3],
}

impl Divisor3 {
    pub fn new(a: ProjectivePoint, b: ProjectivePoint, c: ProjectivePoint) -> Result<Self> {
        for p in [&a, &b, &c] {
            p.expect_dim(2)?;
        }
        let mut points = [a, b, c];
        points.sort();
        Ok(Self { points })
    }

    /// The divisor `3x`.
    pub fn triple(x: ProjectivePoint) -> Result<Self> {
        Self::new(x.clone(), x.clone(), x)
    }

    pub fn points(&self) -> &[ProjectivePoint; 3] {
        &self.points
    }

    /// Distinct support points with multiplicities, in canonical order.
    pub fn support(&self) -> Vec<(ProjectivePoint, usize)> {
        let mut out: Vec<(ProjectivePoint, usize)> = Vec::new();
        for p in &self.points {
            match out.last_mut() {
                Some((q, m)) if q == p => *m += 1,
                _ => out.push((p.clone(), 1)),
            }
        }
        out
    }

    pub fn multiplicity(&self, x: &ProjectivePoint) -> usize {
        self.points.iter().filter(|p| *p == x).count()
    }
}

impl<'de> Deserialize<'de> for Divisor3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            points: Vec<ProjectivePoint>,
        }
        let raw = Raw::deserialize(d)?;
        let [a, b, c]: [ProjectivePoint; 3] = raw
            .points
            .try_into()
            .map_err(|v: Vec<_>| de::Error::custom(format!("expected 3 points, got {}", v.len())))?;
        Divisor3::new(a, b, c).map_err(de::Error::custom)
    }
}
