//! Exact rank computations over the rationals.

use num_traits::{One, Zero};

use crate::scalar::Exact;
use crate::sparse::SparseMatrix;

/// Reduced row-echelon set of rational vectors with incremental insertion.
#[derive(Debug, Clone, Default)]
pub struct EchelonSpan {
    rows: Vec<(usize, Vec<Exact>)>,
}

impl EchelonSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<Exact>) -> Vec<Exact> {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    /// Inserts `v`; returns false when it already lies in the span.
    pub fn insert(&mut self, v: Vec<Exact>) -> bool {
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Exact::one() / &v[pivot];
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

/// Dimension of the smallest subspace containing `start` and invariant
/// under every matrix in `ops`.
pub fn invariant_span_rank(start: &[Exact], ops: &[&SparseMatrix<Exact>]) -> usize {
    let mut span = EchelonSpan::new();
    let mut queue = vec![start.to_vec()];
    while let Some(v) = queue.pop() {
        if !span.insert(v.clone()) {
            continue;
        }
        for op in ops {
            let w = op.apply(&v);
            if w.iter().any(|x| !x.is_zero()) {
                queue.push(w);
            }
        }
    }
    span.rank()
}

/// Unit column vector `e_index` of length `dim`.
pub fn unit_vector(dim: usize, index: usize) -> Vec<Exact> {
    let mut v = vec![Exact::zero(); dim];
    v[index] = Exact::one();
    v
}
