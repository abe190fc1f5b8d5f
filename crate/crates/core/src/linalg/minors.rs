//! Determinants and gcds of minors by direct enumeration.
//!
//! These routines never touch the Smith form code and serve as its
//! independent cross-check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Largest dimension accepted by [`gcd_maximal_minors`].
pub const MINOR_DIM_LIMIT: usize = 12;

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &IntMatrix) -> Result<BigInt> {
    if a.rows() != a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "determinant of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    Ok(if n == 0 { sign } else { sign * &m[n - 1][n - 1] })
}

/// Lexicographic k-subsets of `0..n`.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// gcd of all `k x k` minors; 0 if they all vanish (or none exist).
pub fn gcd_minors(a: &IntMatrix, k: usize) -> BigInt {
    if k > a.rows() || k > a.cols() {
        return BigInt::zero();
    }
    let row_sets = subsets(a.rows(), k);
    let col_sets = subsets(a.cols(), k);
    let mut g = BigInt::zero();
    for rows in &row_sets {
        for cols in &col_sets {
            let det = determinant(&a.submatrix(rows, cols)).expect("square by construction");
            g = g.gcd(&det);
            if g.is_one() {
                return g;
            }
        }
    }
    g
}

/// gcd of all maximal (`min(rows, cols)`-sized) minors.
pub fn gcd_maximal_minors(a: &IntMatrix) -> Result<BigInt> {
    if a.rows() > MINOR_DIM_LIMIT || a.cols() > MINOR_DIM_LIMIT {
        return Err(Error::SizeLimit(format!(
            "{}x{} exceeds the {MINOR_DIM_LIMIT}x{MINOR_DIM_LIMIT} minor enumeration bound",
            a.rows(),
            a.cols()
        )));
    }
    Ok(gcd_minors(a, a.rows().min(a.cols())))
}
