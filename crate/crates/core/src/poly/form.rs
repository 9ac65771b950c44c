use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::arith::{parse_rational, render_rational, Rational};
use crate::error::{Error, Result};

/// Exponent triple of a monomial `X^i Y^j Z^k`.
pub type Exponent = [u32; 3];

/// All exponent triples of total degree `degree`, in descending
/// lexicographic order: `(d,0,0), (d-1,1,0), (d-1,0,1), ..., (0,0,d)`.
///
/// This is the fixed coordinate order for spaces of forms, in particular
/// the ten cubic monomials spanning `P^9`.
pub fn monomial_basis(degree: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for i in (0..=degree).rev() {
        for j in (0..=degree - i).rev() {
            out.push([i, j, degree - i - j]);
        }
    }
    out
}

/// Homogeneous polynomial in `X, Y, Z` with rational coefficients.
///
/// Invariant: every stored exponent sums to `degree` and no stored
/// coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousForm {
    degree: u32,
    terms: BTreeMap<Exponent, Rational>,
}

impl HomogeneousForm {
    pub fn zero(degree: u32) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut f = Self::zero(degree);
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(Error::domain(format!(
                    "exponent {e:?} does not have total degree {degree}"
                )));
            }
            f.add_term(e, c);
        }
        Ok(f)
    }

    /// Builds a form from coefficients listed in [`monomial_basis`] order.
    pub fn from_basis_coefficients(degree: u32, coeffs: &[Rational]) -> Result<Self> {
        let basis = monomial_basis(degree);
        if basis.len() != coeffs.len() {
            return Err(Error::domain(format!(
                "degree {degree} needs {} coefficients, got {}",
                basis.len(),
                coeffs.len()
            )));
        }
        Self::from_terms(degree, basis.into_iter().zip(coeffs.iter().cloned()))
    }

    /// The linear form `aX + bY + cZ`.
    pub fn linear(a: Rational, b: Rational, c: Rational) -> Self {
        Self::from_terms(1, [([1, 0, 0], a), ([0, 1, 0], b), ([0, 0, 1], c)])
            .expect("linear exponents have degree 1")
    }

    pub fn variable(index: usize) -> Self {
        let mut e = [0; 3];
        e[index] = 1;
        Self::from_terms(1, [(e, Rational::one())]).expect("degree 1")
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients in [`monomial_basis`] order.
    pub fn basis_coefficients(&self) -> Vec<Rational> {
        monomial_basis(self.degree)
            .iter()
            .map(|e| self.coefficient(e))
            .collect()
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_degree(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::from_terms(0, [([0, 0, 0], Rational::one())]).expect("constant");
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), 3, "ternary form evaluated at a non-planar point");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t *= xi;
                }
            }
            acc += t;
        }
        acc
    }

    /// Partial derivative with respect to variable `var` (0 = X, 1 = Y, 2 = Z).
    pub fn partial(&self, var: usize) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut d = *e;
            d[var] -= 1;
            out.add_term(d, c * Rational::from_integer(e[var].into()));
        }
        out
    }

    pub fn gradient(&self) -> [Self; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    /// The form `x ↦ F(A x)` for a 3×3 matrix `A` given row by row.
    pub fn linear_substitution(&self, a: &[[Rational; 3]; 3]) -> Self {
        let images: Vec<Self> = a
            .iter()
            .map(|row| Self::linear(row[0].clone(), row[1].clone(), row[2].clone()))
            .collect();
        let powers: Vec<Vec<Self>> = images
            .iter()
            .map(|l| {
                let mut ps = vec![l.pow(0)];
                for k in 1..=self.degree as usize {
                    let next = ps[k - 1].mul(l);
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut out = Self::zero(self.degree);
        for (e, c) in &self.terms {
            let t = powers[0][e[0] as usize]
                .mul(&powers[1][e[1] as usize])
                .mul(&powers[2][e[2] as usize])
                .scale(c);
            out = out.add(&t).expect("equal degrees");
        }
        out
    }

    /// Coefficients of `F(x, y, Z)` as a polynomial in `Z`, lowest first.
    pub fn restrict_to_z_line(&self, x: &Rational, y: &Rational) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.degree as usize + 1];
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..e[0] {
                t *= x;
            }
            for _ in 0..e[1] {
                t *= y;
            }
            out[e[2] as usize] += t;
        }
        out
    }

    fn check_same_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::domain(format!(
                "degree mismatch: {} vs {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }
}

impl fmt::Display for HomogeneousForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for e in monomial_basis(self.degree) {
            let Some(c) = self.terms.get(&e) else {
                continue;
            };
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (name, k) in ["X", "Y", "Z"].iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct FormFile {
    degree: u32,
    terms: Vec<(u32, u32, u32, String)>,
}

/// JSON schema: `{"degree": k, "terms": [[i, j, k, "num/den"], ...]}` with
/// the triples in [`monomial_basis`] order.
impl Serialize for HomogeneousForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = monomial_basis(self.degree)
            .into_iter()
            .filter_map(|e| {
                self.terms
                    .get(&e)
                    .map(|c| (e[0], e[1], e[2], render_rational(c)))
            })
            .collect();
        FormFile {
            degree: self.degree,
            terms,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomogeneousForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = FormFile::deserialize(d)?;
        let mut seen = std::collections::BTreeSet::new();
        let mut terms = Vec::with_capacity(file.terms.len());
        for (i, j, k, c) in file.terms {
            if !seen.insert([i, j, k]) {
                return Err(de::Error::custom(format!("duplicate exponent ({i},{j},{k})")));
            }
            let c = parse_rational(&c).map_err(de::Error::custom)?;
            if c.is_zero() {
                return Err(de::Error::custom(format!("zero coefficient at ({i},{j},{k})")));
            }
            terms.push(([i, j, k], c));
        }
        HomogeneousForm::from_terms(file.degree, terms).map_err(de::Error::custom)
    }
}
