//! Dense matrices and field-generic linear algebra.

use std::ops::{Index, IndexMut};

use crate::field::Field;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vec<E>]) -> Self {
        assert!(cols.iter().all(|c| c.len() == rows), "column length mismatch");
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<E> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<E>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Keeps only the first `n` columns.
    pub fn truncate_cols(&self, n: usize) -> Self {
        Self::from_fn(self.rows, n, |i, j| self[(i, j)].clone())
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&E) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }
}

impl<E> Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

pub fn identity<F: Field>(field: &F, n: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, n, |i, j| if i == j { field.one() } else { field.zero() })
}

pub fn mat_mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "matrix product dimension mismatch");
    Matrix::from_fn(a.rows, b.cols, |i, j| {
        let mut acc = field.zero();
        for k in 0..a.cols {
            acc = field.add(&acc, &field.mul(&a[(i, k)], &b[(k, j)]));
        }
        acc
    })
}

pub fn mat_vec<F: Field>(field: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, v.len(), "matrix-vector dimension mismatch");
    (0..a.rows)
        .map(|i| {
            let mut acc = field.zero();
            for (k, x) in v.iter().enumerate() {
                acc = field.add(&acc, &field.mul(&a[(i, k)], x));
            }
            acc
        })
        .collect()
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref_in_place<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !field.is_zero(&m[(i, c)])) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = field.inv(&m[(r, c)]);
        for j in c..m.cols {
            m[(r, j)] = field.mul(&m[(r, j)], &inv);
        }
        for i in 0..m.rows {
            if i == r || field.is_zero(&m[(i, c)]) {
                continue;
            }
            let factor = m[(i, c)].clone();
            for j in c..m.cols {
                let t = field.mul(&factor, &m[(r, j)]);
                m[(i, j)] = field.sub(&m[(i, j)], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut a = m.clone();
    let p = rref_in_place(field, &mut a);
    (a, p)
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    rref(field, m).1.len()
}

/// Basis of the right kernel `{x : M x = 0}`, one vector per free column.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(field, m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); m.cols];
            v[f] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(&r[(row, f)]);
            }
            v
        })
        .collect()
}

/// Some solution of `M x = b`, if one exists.
pub fn solve<F: Field>(field: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(m.rows, b.len(), "right-hand side length mismatch");
    let aug = Matrix::from_fn(m.rows, m.cols + 1, |i, j| {
        if j < m.cols {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = rref(field, &aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![field.zero(); m.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r[(row, m.cols)].clone();
    }
    Some(x)
}

pub fn det<F: Field>(field: &F, m: &Matrix<F::Elem>) -> F::Elem {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let mut a = m.clone();
    let n = m.rows;
    let mut d = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(&a[(i, c)])) else {
            return field.zero();
        };
        if p != c {
            a.swap_rows(p, c);
            d = field.neg(&d);
        }
        d = field.mul(&d, &a[(c, c)]);
        let inv = field.inv(&a[(c, c)]);
        for i in c + 1..n {
            if field.is_zero(&a[(i, c)]) {
                continue;
            }
            let factor = field.mul(&a[(i, c)], &inv);
            for j in c..n {
                let t = field.mul(&factor, &a[(c, j)]);
                a[(i, j)] = field.sub(&a[(i, j)], &t);
            }
        }
    }
    d
}

pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = m.rows;
    assert_eq!(n, m.cols, "inverse of a non-square matrix");
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            field.one()
        } else {
            field.zero()
        }
    });
    let (r, pivots) = rref(field, &aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
}

/// Characteristic polynomial `det(xI - M)` by the Hessenberg method,
/// coefficients low-to-high.
pub fn charpoly<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<F::Elem> {
    let n = m.rows;
    assert_eq!(n, m.cols, "characteristic polynomial of a non-square matrix");
    let mut h = m.clone();
    // Reduce to upper Hessenberg form by similarity transforms.
    for c in 0..n.saturating_sub(2) {
        let Some(p) = (c + 1..n).find(|&i| !field.is_zero(&h[(i, c)])) else {
            continue;
        };
        if p != c + 1 {
            h.swap_rows(p, c + 1);
            h.swap_cols(p, c + 1);
        }
        let inv = field.inv(&h[(c + 1, c)]);
        for i in c + 2..n {
            if field.is_zero(&h[(i, c)]) {
                continue;
            }
            let u = field.mul(&h[(i, c)], &inv);
            for j in 0..n {
                let t = field.mul(&u, &h[(c + 1, j)]);
                h[(i, j)] = field.sub(&h[(i, j)], &t);
            }
            for j in 0..n {
                let t = field.mul(&u, &h[(j, i)]);
                h[(j, c + 1)] = field.add(&h[(j, c + 1)], &t);
            }
        }
    }
    // Recurrence on leading principal submatrices.
    let mut polys: Vec<Vec<F::Elem>> = vec![vec![field.one()]];
    for k in 0..n {
        // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_{i,k} (prod_{j=i+1..k} h_{j,j-1}) p_i
        let prev = &polys[k];
        let mut next = vec![field.zero(); k + 2];
        for (i, c) in prev.iter().enumerate() {
            next[i + 1] = field.add(&next[i + 1], c);
            next[i] = field.sub(&next[i], &field.mul(&h[(k, k)], c));
        }
        let mut prod = field.one();
        for i in (0..k).rev() {
            prod = field.mul(&prod, &h[(i + 1, i)]);
            let coef = field.mul(&h[(i, k)], &prod);
            for (j, c) in polys[i].iter().enumerate() {
                next[j] = field.sub(&next[j], &field.mul(&coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}
