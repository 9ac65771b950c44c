//! Dense exact linear algebra over the rationals.
//!
//! Everything here is plain Gaussian elimination on `Vec<Vec<Rational>>`;
//! no pivot tolerances, so rank and nullity are exact.

use num_traits::{One, Zero};

use crate::arith::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form. Returns the reduced matrix and its pivot columns.
pub fn rref(mut m: Matrix) -> (Matrix, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            let pivot_row = m[r].clone();
            for (x, p) in m[i][c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                *x -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    rref(m.to_vec()).1.len()
}

/// Basis of the right kernel `{v : M v = 0}`, one vector per free column.
pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m.to_vec());
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[row][f].clone();
            }
            v
        })
        .collect()
}

/// Determinant by elimination. The empty matrix has determinant 1.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            let (top, bottom) = a.split_at_mut(i);
            for (x, p) in bottom[0][c..n].iter_mut().zip(&top[c][c..n]) {
                *x -= &f * p;
            }
        }
    }
    det
}

/// Permanent by Ryser's inclusion-exclusion formula, `O(2^n n)` row sums
/// updated in Gray-code order.
pub fn permanent(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut row_sums = vec![Rational::zero(); n];
    let mut total = Rational::zero();
    let mut subset: u64 = 0;
    for k in 1..(1u64 << n) {
        // Gray code: flip the lowest set bit of k.
        let col = k.trailing_zeros() as usize;
        let bit = 1u64 << col;
        let adding = subset & bit == 0;
        subset ^= bit;
        for (i, s) in row_sums.iter_mut().enumerate() {
            if adding {
                *s += &m[i][col];
            } else {
                *s -= &m[i][col];
            }
        }
        let prod = row_sums
            .iter()
            .fold(Rational::one(), |acc, s| acc * s);
        if (n - subset.count_ones() as usize).is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    fn perm_bruteforce(m: &Matrix) -> Rational {
        fn go(m: &Matrix, row: usize, used: &mut Vec<bool>) -> Rational {
            if row == m.len() {
                return Rational::one();
            }
            let mut acc = Rational::zero();
            for c in 0..m.len() {
                if !used[c] {
                    used[c] = true;
                    acc += &m[row][c] * go(m, row + 1, used);
                    used[c] = false;
                }
            }
            acc
        }
        go(m, 0, &mut vec![false; m.len()])
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&mat(&[&[1, 0], &[0, 1]])), q(1));
        assert_eq!(determinant(&mat(&[&[2, 3], &[4, 5]])), q(-2));
        assert_eq!(determinant(&mat(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])), q(-2));
        assert_eq!(determinant(&mat(&[&[1, 2], &[2, 4]])), q(0));
        assert_eq!(determinant(&[]), q(1));
    }

    #[test]
    fn permanent_matches_expansion() {
        let m = mat(&[&[1, 2, 3, 4], &[-1, 0, 5, 2], &[3, 3, -2, 1], &[0, 7, 1, 1]]);
        assert_eq!(permanent(&m), perm_bruteforce(&m));
        assert_eq!(permanent(&mat(&[&[1, 1], &[1, 1]])), q(2));
        assert_eq!(permanent(&mat(&[&[5]])), q(5));
    }

    #[test]
    fn rank_and_kernel() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let ker = nullspace(&m, 3);
        assert_eq!(ker.len(), 1);
        for row in &m {
            let dot: Rational = row.iter().zip(&ker[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }
}
