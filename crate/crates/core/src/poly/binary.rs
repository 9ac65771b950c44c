use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;

/// Binary form of fixed degree `n`: `coeffs[k]` multiplies `s^(n-k) t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        Self {
            degree: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![Rational::zero(); degree + 1])
    }

    /// The linear form `b s - a t`, which vanishes exactly at `(a : b)`.
    pub fn vanishing_at(a: &Rational, b: &Rational) -> Self {
        Self::new(vec![b.clone(), -a.clone()])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Rational::zero(); self.degree + other.degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::new(vec![Rational::one()]), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut term = c.clone();
            for _ in 0..self.degree - k {
                term *= s;
            }
            for _ in 0..k {
                term *= t;
            }
            acc += term;
        }
        acc
    }

    /// Exact quotient by `divisor`, or `None` if the division leaves a
    /// remainder (or the divisor is zero).
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() || divisor.degree > self.degree {
            return None;
        }
        // Coefficient vectors multiply like polynomials in t.
        let lead = divisor.coeffs.iter().rposition(|c| !c.is_zero())?;
        let mut rem = self.coeffs.clone();
        let qdeg = self.degree - divisor.degree;
        let mut quot = vec![Rational::zero(); qdeg + 1];
        let inv = divisor.coeffs[lead].recip();
        for k in (0..=qdeg).rev() {
            let idx = k + lead;
            let f = &rem[idx] * &inv;
            if f.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate().take(lead + 1) {
                rem[k + i] -= &f * c;
            }
            quot[k] = f;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    /// Linear functionals (on the coefficient vector) whose common kernel is
    /// the set of forms of this degree vanishing to order at least `order`
    /// at `(a : b)`: the `order` partial derivatives
    /// `d^i/ds^i d^j/dt^j` with `i + j = order - 1`, evaluated at `(a, b)`.
    pub fn vanishing_conditions(
        degree: usize,
        a: &Rational,
        b: &Rational,
        order: usize,
    ) -> Vec<Vec<Rational>> {
        assert!(order >= 1 && order <= degree + 1);
        let m = order - 1;
        (0..=m)
            .map(|i| {
                let j = m - i;
                (0..=degree)
                    .map(|k| {
                        let s_exp = degree - k;
                        if s_exp < i || k < j {
                            return Rational::zero();
                        }
                        let mut v = Rational::from_integer(falling(s_exp, i) * falling(k, j));
                        for _ in 0..s_exp - i {
                            v *= a;
                        }
                        for _ in 0..k - j {
                            v *= b;
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    }
}

fn falling(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}
