//! Smith Normal Form with unimodular multipliers.
//!
//! Computes `A = U S V` where `S` is diagonal with nonnegative entries
//! `s_1 | s_2 | ... | s_r`, zeros last, and `U`, `V` unimodular. The inverse
//! of `V` is accumulated alongside `V` during elimination.
//!
//! Pivots are chosen by least absolute value, ties broken by the lowest
//! `(row, col)`, so the output is deterministic.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};
use crate::linalg::minors::determinant;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// Nonzero diagonal entries of `s`, in order.
    pub invariant_factors: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Diagonal entry `i` of `s`, or zero past the diagonal.
    pub fn diagonal(&self, i: usize) -> BigInt {
        self.invariant_factors.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Product of the first `min(rows, cols)` diagonal entries: the gcd of
    /// the maximal minors of the original matrix.
    pub fn maximal_minor_gcd(&self) -> BigInt {
        let k = self.s.rows().min(self.s.cols());
        (0..k).map(|i| self.diagonal(i)).product()
    }

    /// Checks every structural invariant against the original matrix.
    ///
    /// Unimodularity uses determinants, so this is meant for small inputs.
    pub fn verify(&self, a: &IntMatrix) -> Result<()> {
        let fail = |what: &str| Err(Error::InternalInconsistency(format!("snf: {what}")));
        if self.u.mul(&self.s)?.mul(&self.v)? != *a {
            return fail("U S V != A");
        }
        if !self.v.mul(&self.v_inv)?.is_identity() {
            return fail("V V^-1 != I");
        }
        if !determinant(&self.u)?.abs().is_one() || !determinant(&self.v)?.abs().is_one() {
            return fail("multiplier not unimodular");
        }
        if !self.s.is_diagonal() {
            return fail("S not diagonal");
        }
        let k = self.s.rows().min(self.s.cols());
        let diag: Vec<&BigInt> = (0..k).map(|i| self.s.get(i, i)).collect();
        if diag.iter().any(|x| x.is_negative()) {
            return fail("negative diagonal entry");
        }
        for w in diag.windows(2) {
            if w[0].is_zero() {
                if !w[1].is_zero() {
                    return fail("zero before nonzero on the diagonal");
                }
            } else if !(w[1] % w[0]).is_zero() {
                return fail("divisibility chain broken");
            }
        }
        Ok(())
    }
}

/// Smith Normal Form of any rectangular integer matrix.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let mut e = Elimination::new(a);
    let steps = e.rows.min(e.cols);
    let mut invariant_factors = Vec::new();
    for t in 0..steps {
        let Some((i, j)) = e.smallest_in_block(t) else {
            break;
        };
        e.swap_rows(t, i, t);
        e.swap_cols(t, j, t);
        e.reduce_pivot(t);
        if e.work[t][t].is_negative() {
            e.negate_row(t, t);
        }
        invariant_factors.push(e.work[t][t].clone());
    }
    e.finish(invariant_factors)
}

// Working state. `work` and the multipliers are stored so that every
// elementary operation walks a contiguous vector:
//   work  column-major (A gets row and column ops)
//   u     column-major (row op on A = column op on U)
//   v     row-major    (column op on A = row op on V)
//   v_inv column-major (column op on A = same column op on V^-1)
struct Elimination {
    rows: usize,
    cols: usize,
    work: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    v_inv: Vec<Vec<BigInt>>,
}

fn identity_lines(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            let mut line = vec![BigInt::zero(); n];
            line[i] = BigInt::one();
            line
        })
        .collect()
}

fn pair_mut<T>(v: &mut [T], a: usize, b: usize) -> (&mut T, &T) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&mut lo[a], &hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&mut hi[0], &lo[b])
    }
}

/// `dst += c * src`, skipping zeros of `src`.
fn axpy(dst: &mut [BigInt], src: &[BigInt], c: &BigInt) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += c * s;
        }
    }
}

impl Elimination {
    fn new(a: &IntMatrix) -> Self {
        let (rows, cols) = (a.rows(), a.cols());
        Elimination {
            rows,
            cols,
            work: (0..cols).map(|j| a.column(j)).collect(),
            u: identity_lines(rows),
            v: identity_lines(cols),
            v_inv: identity_lines(cols),
        }
    }

    /// Least nonzero |entry| in rows `t..`, cols `t..`; ties to lowest (row, col).
    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(&BigInt, usize, usize)> = None;
        for j in t..self.cols {
            for i in t..self.rows {
                let x = &self.work[j][i];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((b, bi, bj)) => match x.magnitude().cmp(b.magnitude()) {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Equal => (i, j) < (bi, bj),
                        std::cmp::Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some((x, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    // Columns before `from` are zero in every row touched here.
    fn row_add(&mut self, dst: usize, src: usize, c: &BigInt, from: usize) {
        for col in &mut self.work[from..] {
            if !col[src].is_zero() {
                let delta = c * &col[src];
                col[dst] += delta;
            }
        }
        let (s, d) = pair_mut(&mut self.u, src, dst);
        axpy(s, d, &-c);
    }

    fn col_add(&mut self, dst: usize, src: usize, c: &BigInt, from: usize) {
        let (d, s) = pair_mut(&mut self.work, dst, src);
        axpy(&mut d[from..], &s[from..], c);
        let (d, s) = pair_mut(&mut self.v_inv, dst, src);
        axpy(d, s, c);
        let (s, d) = pair_mut(&mut self.v, src, dst);
        axpy(s, d, &-c);
    }

    fn swap_rows(&mut self, a: usize, b: usize, from: usize) {
        if a == b {
            return;
        }
        for col in &mut self.work[from..] {
            col.swap(a, b);
        }
        self.u.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize, _from: usize) {
        if a == b {
            return;
        }
        self.work.swap(a, b);
        self.v_inv.swap(a, b);
        self.v.swap(a, b);
    }

    fn negate_row(&mut self, r: usize, from: usize) {
        for col in &mut self.work[from..] {
            col[r] = -std::mem::take(&mut col[r]);
        }
        for x in &mut self.u[r] {
            *x = -std::mem::take(x);
        }
    }

    /// Clears row and column `t` around the pivot at `(t, t)` and makes the
    /// pivot divide every entry of the remaining block.
    fn reduce_pivot(&mut self, t: usize) {
        loop {
            let p = self.work[t][t].clone();
            let mut clean = true;
            for i in t + 1..self.rows {
                if self.work[t][i].is_zero() {
                    continue;
                }
                let q = &self.work[t][i] / &p;
                if !q.is_zero() {
                    self.row_add(i, t, &-q, t);
                }
                clean &= self.work[t][i].is_zero();
            }
            for j in t + 1..self.cols {
                if self.work[j][t].is_zero() {
                    continue;
                }
                let q = &self.work[j][t] / &p;
                if !q.is_zero() {
                    self.col_add(j, t, &-q, t);
                }
                clean &= self.work[j][t].is_zero();
            }

            if clean {
                if p.magnitude().is_one() {
                    return;
                }
                match self.first_not_divisible(t, &p) {
                    None => return,
                    Some(i) => {
                        self.row_add(t, i, &BigInt::one(), t);
                        continue;
                    }
                }
            }

            // A remainder smaller than the pivot is left in row or column t.
            let mut best: Option<(usize, usize)> = None;
            let mut best_mag = p.magnitude().clone();
            for j in t + 1..self.cols {
                let x = &self.work[j][t];
                if !x.is_zero() && x.magnitude() < &best_mag {
                    best_mag = x.magnitude().clone();
                    best = Some((t, j));
                }
            }
            for i in t + 1..self.rows {
                let x = &self.work[t][i];
                if !x.is_zero() && x.magnitude() < &best_mag {
                    best_mag = x.magnitude().clone();
                    best = Some((i, t));
                }
            }
            let (i, j) = best.expect("a nonzero remainder is smaller than the pivot");
            self.swap_rows(t, i, t);
            self.swap_cols(t, j, t);
        }
    }

    /// First row (row-major scan) of the trailing block holding an entry
    /// not divisible by `p`.
    fn first_not_divisible(&self, t: usize, p: &BigInt) -> Option<usize> {
        for i in t + 1..self.rows {
            for j in t + 1..self.cols {
                let x = &self.work[j][i];
                if !x.is_zero() && !(x % p).is_zero() {
                    return Some(i);
                }
            }
        }
        None
    }

    fn finish(self, invariant_factors: Vec<BigInt>) -> SnfResult {
        let (n, m) = (self.rows, self.cols);
        let work = self.work;
        let u = self.u;
        let v = self.v;
        let v_inv = self.v_inv;
        SnfResult {
            s: IntMatrix::from_fn(n, m, |i, j| work[j][i].clone()),
            u: IntMatrix::from_fn(n, n, |i, j| u[j][i].clone()),
            v: IntMatrix::from_fn(m, m, |i, j| v[i][j].clone()),
            v_inv: IntMatrix::from_fn(m, m, |i, j| v_inv[j][i].clone()),
            invariant_factors,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::minors::gcd_minors;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn factors(r: &SnfResult) -> Vec<i64> {
        r.invariant_factors.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn identity_is_fixed() {
        let a = IntMatrix::identity(2);
        let r = snf(&a);
        assert_eq!(r.s, a);
        assert!(r.u.is_identity() && r.v.is_identity() && r.v_inv.is_identity());
        r.verify(&a).unwrap();
    }

    #[test]
    fn triangle_incidence() {
        let a = m(&[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]]);
        let r = snf(&a);
        assert_eq!(factors(&r), vec![1, 1, 2]);
        r.verify(&a).unwrap();
    }

    #[test]
    fn path_incidence() {
        // Minor gcds: 1x1 -> 1, 2x2 -> gcd(1, 1, 1) = 1.
        let a = m(&[vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert_eq!(gcd_minors(&a, 1), BigInt::one());
        assert_eq!(gcd_minors(&a, 2), BigInt::one());
        let r = snf(&a);
        assert_eq!(factors(&r), vec![1, 1]);
        r.verify(&a).unwrap();
    }

    #[test]
    fn empty_dimensions() {
        for (rows, cols) in [(0, 0), (0, 3), (2, 0)] {
            let a = IntMatrix::zeros(rows, cols);
            let r = snf(&a);
            assert!(r.invariant_factors.is_empty());
            r.verify(&a).unwrap();
        }
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) has Smith form diag(1, 6)
        let a = m(&[vec![2, 0], vec![0, 3]]);
        let r = snf(&a);
        assert_eq!(factors(&r), vec![1, 6]);
        r.verify(&a).unwrap();
    }

    #[test]
    fn negative_and_rank_deficient() {
        let a = m(&[vec![-4, 6, 2], vec![-8, 12, 4], vec![6, -9, -3]]);
        let r = snf(&a);
        assert_eq!(factors(&r), vec![1]);
        r.verify(&a).unwrap();
        let a = m(&[vec![0, 0, 0], vec![0, -6, 0]]);
        let r = snf(&a);
        assert_eq!(factors(&r), vec![6]);
        r.verify(&a).unwrap();
    }

    #[test]
    fn large_entries_stay_exact() {
        let big = i64::MAX;
        let a = m(&[vec![big, big - 1], vec![big - 2, big]]);
        let r = snf(&a);
        r.verify(&a).unwrap();
        let det = determinant(&a).unwrap();
        let prod: BigInt = r.invariant_factors.iter().product();
        assert_eq!(prod, det.abs());
    }

    fn matrix_strategy() -> impl Strategy<Value = IntMatrix> {
        (0usize..=8, 0usize..=8).prop_flat_map(|(r, c)| {
            prop::collection::vec(-9i64..=9, r * c).prop_map(move |data| IntMatrix::from_fn(r, c, |i, j| data[i * c + j]))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn random_matrices_satisfy_invariants(a in matrix_strategy()) {
            let r = snf(&a);
            prop_assert!(r.verify(&a).is_ok(), "{:?}", r.verify(&a));
            // d_1 ... d_k = gcd of k x k minors
            let mut prefix = BigInt::one();
            for k in 1..=3.min(a.rows().min(a.cols())) {
                prefix *= r.diagonal(k - 1);
                prop_assert_eq!(&prefix, &gcd_minors(&a, k));
            }
        }
    }
}
