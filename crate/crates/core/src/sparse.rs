//! Row-oriented sparse matrices over [`Scalar`]s.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Sparse matrix with sorted rows and no stored zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix<T> {
    rows: Vec<BTreeMap<usize, T>>,
    cols: usize,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![BTreeMap::new(); rows],
            cols,
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_diagonal((0..dim).map(|_| T::one()))
    }

    pub fn from_diagonal(diag: impl IntoIterator<Item = T>) -> Self {
        let rows: Vec<BTreeMap<usize, T>> = diag
            .into_iter()
            .enumerate()
            .map(|(r, v)| {
                let mut row = BTreeMap::new();
                if !v.is_zero() {
                    row.insert(r, v);
                }
                row
            })
            .collect();
        let cols = rows.len();
        Self { rows, cols }
    }

    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            m.add_to(r, c, v);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.nrows(), self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.rows[r].get(&c).cloned().unwrap_or_else(T::zero)
    }

    pub fn row(&self, r: usize) -> &BTreeMap<usize, T> {
        &self.rows[r]
    }

    /// Adds `v` to entry `(r, c)`, dropping the entry if it cancels.
    pub fn add_to(&mut self, r: usize, c: usize, v: T) {
        assert!(r < self.nrows() && c < self.cols, "index ({r}, {c}) out of bounds");
        if v.is_zero() {
            return;
        }
        let row = &mut self.rows[r];
        match row.remove(&c) {
            Some(old) => {
                let sum = old + v;
                if !sum.is_zero() {
                    row.insert(c, sum);
                }
            }
            None => {
                row.insert(c, v);
            }
        }
    }

    /// Entries in row-major ascending order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(r, c, _)| r == c)
    }

    /// First off-diagonal entry, if any.
    pub fn off_diagonal(&self) -> Option<(usize, usize)> {
        self.entries().find(|(r, c, _)| r != c).map(|(r, c, _)| (r, c))
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.nrows().min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> T {
        self.diagonal().into_iter().fold(T::zero(), |a, b| a + b)
    }

    /// Largest absolute entry, zero for the empty matrix.
    pub fn max_abs(&self) -> T {
        self.entries()
            .map(|(_, _, v)| v.abs())
            .fold(T::zero(), |acc, v| if v > acc { v } else { acc })
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(usize, usize, &T) -> U) -> SparseMatrix<U> {
        SparseMatrix::from_triplets(
            self.nrows(),
            self.cols,
            self.entries().map(|(r, c, v)| (r, c, f(r, c, v))).collect::<Vec<_>>(),
        )
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.nrows());
        for (r, c, v) in self.entries() {
            out.rows[c].insert(r, v.clone());
        }
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zeros(self.nrows(), self.cols);
        }
        self.map(|_, _, v| v.clone() * s.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, T::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -T::one())
    }

    /// `self + s * other`.
    pub fn combine(&self, other: &Self, s: T) -> Self {
        assert_eq!(self.dims(), other.dims(), "dimension mismatch in sum");
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_to(r, c, v.clone() * s.clone());
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.nrows(), "dimension mismatch in product");
        let mut out = Self::zeros(self.nrows(), other.cols);
        for (r, row) in self.rows.iter().enumerate() {
            for (&k, a) in row {
                for (&c, b) in &other.rows[k] {
                    out.add_to(r, c, a.clone() * b.clone());
                }
            }
        }
        out
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.matmul(other).sub(&other.matmul(self))
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        self.matmul(other).add(&other.matmul(self))
    }

    /// Graded bracket `AB - sign * BA`, `sign = +1` commutator, `-1` anticommutator.
    pub fn bracket(&self, other: &Self, sign: i64) -> Self {
        self.matmul(other).combine(&other.matmul(self), T::from_i64(-sign))
    }

    pub fn apply(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.cols, "dimension mismatch in apply");
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .fold(T::zero(), |acc, (&c, v)| acc + v.clone() * x[c].clone())
            })
            .collect()
    }

    /// Matrix with rows and columns restricted to `keep` (in order).
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let position: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let mut out = Self::zeros(keep.len(), keep.len());
        for (new_r, &r) in keep.iter().enumerate() {
            for (c, v) in &self.rows[r] {
                if let Some(&new_c) = position.get(c) {
                    out.rows[new_r].insert(new_c, v.clone());
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.cols]; self.nrows()];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }
}
