//! Integer matrices: exact determinants, Hermite and Smith normal forms.
//!
//! The Hermite normal form used throughout the workspace is *column style*:
//! lattice vectors are columns, `H = M·U` with `U` unimodular, and `H` is in
//! lower column-echelon form. Column `j` of `H` has its first nonzero entry
//! (the pivot) in row `r_j` with `r_0 < r_1 < …`, every pivot is positive,
//! and in each pivot row the entries to the left of the pivot lie in
//! `[0, pivot)`. Zero columns are moved to the right.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::Matrix;

pub type IntMatrix = Matrix<BigInt>;

/// Extended gcd on integers: `(g, s, t)` with `s·a + t·b = g ≥ 0`.
pub fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

impl Matrix<BigInt> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, BigInt::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols(), other.rows(), "matrix product dimension mismatch");
        Matrix::from_fn(self.rows(), other.cols(), |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols() {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                acc += a * &other[(k, j)];
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols(), v.len(), "matrix-vector dimension mismatch");
        (0..self.rows())
            .map(|i| (0..self.cols()).map(|k| &self[(i, k)] * &v[k]).sum())
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.rows();
        assert_eq!(n, self.cols(), "determinant of a non-square matrix");
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    fn col_combine(&mut self, p: usize, q: usize, s: &BigInt, t: &BigInt, u: &BigInt, v: &BigInt) {
        // (col_p, col_q) <- (s col_p + t col_q, u col_p + v col_q)
        for i in 0..self.rows() {
            let a = self[(i, p)].clone();
            let b = self[(i, q)].clone();
            if a.is_zero() && b.is_zero() {
                continue;
            }
            self[(i, p)] = s * &a + t * &b;
            self[(i, q)] = u * &a + v * &b;
        }
    }

    fn col_axpy(&mut self, target: usize, src: usize, factor: &BigInt) {
        // col_target -= factor * col_src
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows() {
            if self[(i, src)].is_zero() {
                continue;
            }
            let t = factor * &self[(i, src)];
            self[(i, target)] -= t;
        }
    }

    fn col_negate(&mut self, j: usize) {
        for i in 0..self.rows() {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    fn hnf_impl(&self, mut track: Option<&mut IntMatrix>) -> (IntMatrix, usize) {
        let (m, n) = (self.rows(), self.cols());
        let mut h = self.clone();
        let mut pc = 0;
        for i in 0..m {
            if pc == n {
                break;
            }
            for j in pc + 1..n {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let a = h[(i, pc)].clone();
                let b = h[(i, j)].clone();
                let (g, s, t) = xgcd(&a, &b);
                let u = -(&b / &g);
                let v = &a / &g;
                h.col_combine(pc, j, &s, &t, &u, &v);
                if let Some(tr) = track.as_deref_mut() {
                    tr.col_combine(pc, j, &s, &t, &u, &v);
                }
            }
            if h[(i, pc)].is_zero() {
                continue;
            }
            if h[(i, pc)].is_negative() {
                h.col_negate(pc);
                if let Some(tr) = track.as_deref_mut() {
                    tr.col_negate(pc);
                }
            }
            let piv = h[(i, pc)].clone();
            for k in 0..pc {
                let q = h[(i, k)].div_floor(&piv);
                h.col_axpy(k, pc, &q);
                if let Some(tr) = track.as_deref_mut() {
                    tr.col_axpy(k, pc, &q);
                }
            }
            pc += 1;
        }
        (h, pc)
    }

    /// Column-style Hermite normal form `H` with unimodular `U`, `self·U = H`.
    pub fn hnf(&self) -> (IntMatrix, IntMatrix) {
        let mut u = IntMatrix::identity(self.cols());
        let (h, _) = self.hnf_impl(Some(&mut u));
        (h, u)
    }

    /// HNF basis of the column lattice: the nonzero columns of the HNF.
    pub fn hnf_basis(&self) -> IntMatrix {
        let (h, r) = self.hnf_impl(None);
        h.truncate_cols(r)
    }

    /// Column rank over `Q`.
    pub fn rank(&self) -> usize {
        self.hnf_impl(None).1
    }

    /// Rows holding the pivots of a matrix already in column HNF.
    pub fn hnf_pivot_rows(&self) -> Vec<usize> {
        (0..self.cols())
            .filter_map(|j| (0..self.rows()).find(|&i| !self[(i, j)].is_zero()))
            .collect()
    }

    /// Smith normal form invariants `d_1 | d_2 | …`, length `min(rows, cols)`.
    pub fn snf(&self) -> Vec<BigInt> {
        let (m, n) = (self.rows(), self.cols());
        let mut a = self.clone();
        let k = m.min(n);
        let mut out = Vec::with_capacity(k);
        for t in 0..k {
            // Smallest nonzero entry in the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                out.extend(std::iter::repeat_n(BigInt::zero(), k - t));
                break;
            };
            a.swap_rows(t, bi);
            a.swap_cols(t, bj);
            loop {
                let mut dirty = false;
                for i in t + 1..m {
                    if a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = a[(i, t)].div_floor(&a[(t, t)]);
                    for j in t..n {
                        let v = &q * &a[(t, j)];
                        a[(i, j)] -= v;
                    }
                    if !a[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..n {
                    if a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = a[(t, j)].div_floor(&a[(t, t)]);
                    for i in t..m {
                        let v = &q * &a[(i, t)];
                        a[(i, j)] -= v;
                    }
                    if !a[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    // Move the smallest leftover in row/column t onto the diagonal.
                    let mut best = (t, t);
                    for i in t + 1..m {
                        if !a[(i, t)].is_zero() && a[(i, t)].abs() < a[best].abs() {
                            best = (i, t);
                        }
                    }
                    for j in t + 1..n {
                        if !a[(t, j)].is_zero() && a[(t, j)].abs() < a[best].abs() {
                            best = (t, j);
                        }
                    }
                    a.swap_rows(t, best.0);
                    a.swap_cols(t, best.1);
                    continue;
                }
                let piv = a[(t, t)].clone();
                let offender = (t + 1..m)
                    .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&a[(i, j)] % &piv).is_zero());
                match offender {
                    Some((i, _)) => {
                        for j in t..n {
                            let v = a[(i, j)].clone();
                            a[(t, j)] += v;
                        }
                    }
                    None => break,
                }
            }
            out.push(a[(t, t)].abs());
        }
        out
    }
}
