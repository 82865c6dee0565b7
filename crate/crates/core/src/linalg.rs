//! Dense matrices generic over a [`Field`] scalar.
//!
//! Exact rank and determinant use the Bareiss fraction-free elimination
//! scheme: every division in the recurrence is exact in the subring
//! generated by the entries, which controls coefficient blowup for
//! integral cyclotomic data. Kernels, solving and inversion use reduced
//! row echelon form.

use crate::scalar::Field;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    d: Vec<T>,
}

impl<T: Field> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            d: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut d = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                d.push(f(i, j));
            }
        }
        Mat { rows, cols, d }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            d: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.d[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            d: self.d.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Mat<T> {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(|x| x.is_zero())
    }

    pub fn is_scalar(&self) -> Option<T> {
        assert_eq!(self.rows, self.cols);
        let s = self[(0, 0)].clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expect = if i == j { s.clone() } else { T::zero() };
                if self[(i, j)] != expect {
                    return None;
                }
            }
        }
        Some(s)
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.cols);
        let mut d = self.d.clone();
        d.extend(other.d.iter().cloned());
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            d,
        }
    }

    /// Stack a nonempty list of matrices with equal column counts.
    pub fn vstack_all(blocks: &[Mat<T>]) -> Mat<T> {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        let mut d = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            rows += b.rows;
            d.extend(b.d.iter().cloned());
        }
        Mat { rows, cols, d }
    }

    /// Basis of the column space: the pivot columns of the matrix.
    pub fn column_space(&self) -> Mat<T> {
        let (_, pivots) = self.rref();
        Mat::from_fn(self.rows, pivots.len(), |i, j| self[(i, pivots[j])].clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.d.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |a: &Vec<T>, i: usize, j: usize| a[i * cols + j].clone();
        let mut prev = T::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !at(&a, i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    a.swap(r * cols + j, p * cols + j);
                }
            }
            let pivot = at(&a, r, c);
            for i in (r + 1)..rows {
                let head = at(&a, i, c);
                for j in (c + 1)..cols {
                    let num = pivot.clone() * at(&a, i, j) - head.clone() * at(&a, r, j);
                    a[i * cols + j] = num / prev.clone();
                }
                a[i * cols + c] = T::zero();
            }
            prev = pivot;
            r += 1;
        }
        r
    }

    /// Determinant by Bareiss elimination; the last pivot is the value.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.d.clone();
        let at = |a: &Vec<T>, i: usize, j: usize| a[i * n + j].clone();
        let mut prev = T::one();
        let mut sign = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !at(&a, i, k).is_zero()) else {
                return T::zero();
            };
            if p != k {
                sign = !sign;
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
            }
            let pivot = at(&a, k, k);
            for i in (k + 1)..n {
                let head = at(&a, i, k);
                for j in (k + 1)..n {
                    let num = pivot.clone() * at(&a, i, j) - head.clone() * at(&a, k, j);
                    a[i * n + j] = num / prev.clone();
                }
                a[i * n + k] = T::zero();
            }
            prev = pivot;
        }
        let d = at(&a, n - 1, n - 1);
        if sign {
            -d
        } else {
            d
        }
    }

    /// Reduced row echelon form; returns the pivot column indices.
    pub fn rref(&self) -> (Mat<T>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let tmp = m[(p, j)].clone();
                    m[(p, j)] = m[(r, j)].clone();
                    m[(r, j)] = tmp;
                }
            }
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let delta = f.clone() * m[(r, j)].clone();
                        m[(i, j)] = m[(i, j)].clone() - delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the right kernel, one column per basis vector.
    pub fn kernel(&self) -> Mat<T> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Mat::zeros(self.cols, free.len());
        for (b, &fc) in free.iter().enumerate() {
            k[(fc, b)] = T::one();
            for (pi, &pc) in pivots.iter().enumerate() {
                k[(pc, b)] = -r[(pi, fc)].clone();
            }
        }
        k
    }

    /// Solve self * x = b, if consistent.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![T::zero(); self.cols];
        for (pi, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(pi, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat<T>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = T::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.d[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.d[i * self.cols + j]
    }
}

impl<T: Field> Mul for &Mat<T> {
    type Output = Mat<T>;
    fn mul(self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out: Mat<T> = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let delta = a.clone() * b.clone();
                        out[(i, j)] = out[(i, j)].clone() + delta;
                    }
                }
            }
        }
        out
    }
}

impl<T: Field> Add for &Mat<T> {
    type Output = Mat<T>;
    fn add(self, rhs: &Mat<T>) -> Mat<T> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + rhs[(i, j)].clone()
        })
    }
}

impl<T: Field> Sub for &Mat<T> {
    type Output = Mat<T>;
    fn sub(self, rhs: &Mat<T>) -> Mat<T> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - rhs[(i, j)].clone()
        })
    }
}

impl<T: Field> Neg for &Mat<T> {
    type Output = Mat<T>;
    fn neg(self) -> Mat<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: fmt::Debug> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.d[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}
