use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;

/// Dense univariate polynomial over the rationals, lowest coefficient first.
/// The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monic linear polynomial `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
        Self::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap() * &lead_inv;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &f * c;
            }
            quot[k] = f;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, made monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Integer multiple with coprime integer coefficients and positive
    /// leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return ints;
        }
        let sign = if ints.last().is_some_and(|l| l.is_negative()) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &content * &sign).collect()
    }

    /// All distinct rational roots, in increasing order.
    ///
    /// Real roots of the squarefree part are isolated with a Sturm sequence;
    /// each isolating interval is shrunk below `1 / (2 lc^2)` and its simplest
    /// rational is tested exactly. A rational root `p/q` of a primitive
    /// integer polynomial has `q | lc`, and two distinct fractions with
    /// denominators at most `|lc|` are at least `1 / lc^2` apart.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sf = self.squarefree_part();
        let int_coeffs = sf.primitive_integer();
        let lc = int_coeffs.last().unwrap().abs();
        let p = UniPoly::new(int_coeffs.into_iter().map(Rational::from_integer).collect());
        let sturm = sturm_sequence(&p);
        let bound = cauchy_bound(&p);
        let min_width = Rational::new(BigInt::one(), BigInt::from(2) * &lc * &lc);

        let mut roots = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((a, b)) = stack.pop() {
            let count = sign_changes(&sturm, &a) - sign_changes(&sturm, &b);
            if count == 0 {
                continue;
            }
            if count == 1 && &b - &a < min_width {
                let cand = simplest_between(&a, &b);
                if p.eval(&cand).is_zero() {
                    roots.push(cand);
                }
                continue;
            }
            let mid = (&a + &b) / Rational::from_integer(BigInt::from(2));
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-Rational::one()));
    }
    seq
}

fn sign_changes(seq: &[UniPoly], x: &Rational) -> i64 {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for p in seq {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if last.is_some_and(|l| l != pos) {
            changes += 1;
        }
        last = Some(pos);
    }
    changes
}

fn cauchy_bound(p: &UniPoly) -> Rational {
    let lead = p.leading().unwrap().abs();
    let m = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    m + Rational::from_integer(BigInt::from(2))
}

/// The rational with the smallest denominator in the closed interval
/// `[a, b]`, found by continued-fraction descent.
fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    if a.is_negative() && b.is_positive() || a.is_zero() || b.is_zero() {
        return Rational::zero();
    }
    if b.is_negative() {
        return -simplest_between(&-b, &-a);
    }
    let fl = a.floor();
    if a.is_integer() {
        return a.clone();
    }
    if &(fl.clone() + Rational::one()) <= b {
        return fl + Rational::one();
    }
    // a and b share the integer part; recurse on reciprocals of the fractional parts.
    let fa = a - &fl;
    let fb = b - &fl;
    fl + simplest_between(&fb.recip(), &fa.recip()).recip()
}

/// Resultant of two polynomials given by coefficient vectors (lowest
/// first) with formal degrees `f.len() - 1` and `g.len() - 1`: the
/// determinant of their Sylvester matrix.
pub fn resultant(f: &[Rational], g: &[Rational]) -> Rational {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    if size == 0 {
        return Rational::one();
    }
    let mut rows = vec![vec![Rational::zero(); size]; size];
    for i in 0..n {
        for (j, c) in f.iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    crate::linalg::determinant(&rows)
}

/// Polynomial of degree below `xs.len()` through the points `(xs[i], ys[i])`.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    // Newton divided differences.
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut poly = UniPoly::zero();
    for i in (0..n).rev() {
        poly = poly
            .mul(&UniPoly::linear_root(&xs[i]))
            .add(&UniPoly::constant(coef[i].clone()));
    }
    poly
}
