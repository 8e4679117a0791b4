//! Hamiltonians built from the capped operators and their spectra.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::basis::AlgebraSpec;
use crate::error::{Error, Result};
use crate::operators::{ExactOperator, FockSpace, Generators, Normalization, Operator};
use crate::relations::Backend;
use crate::scalar::{format_exact, Exact, Scalar};
use crate::sparse::SparseMatrix;

/// Absolute width of a float eigenvalue cluster.
pub const CLUSTER_TOLERANCE: f64 = 1e-9;
/// Largest tolerated asymmetry of an assembled float Hamiltonian.
pub const SYMMETRY_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub enum Eigenvalue {
    Exact(Exact),
    Float(f64),
}

impl Eigenvalue {
    pub fn to_f64(&self) -> f64 {
        match self {
            Eigenvalue::Exact(v) => Scalar::to_f64(v),
            Eigenvalue::Float(v) => *v,
        }
    }
}

impl std::fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Eigenvalue::Exact(v) => f.write_str(&format_exact(v)),
            Eigenvalue::Float(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Level {
    pub value: Eigenvalue,
    pub mult: usize,
}

impl Serialize for Level {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Level", 2)?;
        match &self.value {
            Eigenvalue::Exact(v) => s.serialize_field("value", &format_exact(v))?,
            Eigenvalue::Float(v) => s.serialize_field("value", v)?,
        }
        s.serialize_field("mult", &self.mult)?;
        s.end()
    }
}

/// Distinct eigenvalues in ascending order with multiplicities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub backend: Backend,
    pub levels: Vec<Level>,
}

impl SpectrumReport {
    pub fn total_multiplicity(&self) -> usize {
        self.levels.iter().map(|l| l.mult).sum()
    }

    /// Exact rational eigenvalues with multiplicities, merged on equality.
    pub fn from_exact(mut values: Vec<Exact>) -> Self {
        values.sort();
        let mut levels: Vec<Level> = Vec::new();
        for v in values {
            match levels.last_mut() {
                Some(Level { value: Eigenvalue::Exact(last), mult }) if *last == v => *mult += 1,
                _ => levels.push(Level { value: Eigenvalue::Exact(v), mult: 1 }),
            }
        }
        Self { backend: Backend::Exact, levels }
    }

    /// Float eigenvalues clustered at [`CLUSTER_TOLERANCE`]; each level is
    /// reported at its cluster mean.
    pub fn from_float(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        let mut clusters: Vec<Vec<f64>> = Vec::new();
        for v in values {
            match clusters.last_mut() {
                Some(c) if v - c[c.len() - 1] <= CLUSTER_TOLERANCE => c.push(v),
                _ => clusters.push(vec![v]),
            }
        }
        let levels = clusters
            .into_iter()
            .map(|c| Level {
                value: Eigenvalue::Float(c.iter().sum::<f64>() / c.len() as f64),
                mult: c.len(),
            })
            .collect();
        Self { backend: Backend::Float, levels }
    }
}

/// `H = sum_i eps_i a_i^+ a_i^-` from exact matrix products. The result is
/// diagonal with entry `sum_i eps_i v_i (1 - (|v| - 1)/p)`.
pub fn diagonal_hamiltonian(space: &FockSpace, energies: &[Exact]) -> Result<ExactOperator> {
    let spec = space.spec();
    if energies.len() != spec.n() {
        return Err(Error::EnergyCount { expected: spec.n(), found: energies.len() });
    }
    let g = Generators::exact(space);
    let dim = space.dimension();
    let h = energies.iter().enumerate().fold(SparseMatrix::zeros(dim, dim), |acc, (i, eps)| {
        acc.combine(&g.creation[i].matmul(&g.annihilation[i]), eps.clone())
    });
    Ok(Operator::new(space.tag(Normalization::Unnormalized), h))
}

/// Spectrum of a diagonal exact operator.
pub fn exact_spectrum(op: &ExactOperator) -> Result<SpectrumReport> {
    if let Some((row, col)) = op.matrix().off_diagonal() {
        return Err(Error::NotDiagonal { row, col });
    }
    Ok(SpectrumReport::from_exact(op.matrix().diagonal()))
}

/// One row of the two-mode toy model table.
#[derive(Debug, Clone, PartialEq)]
pub struct ToyLevel {
    pub n: u32,
    pub energy: Exact,
    pub mult: usize,
    /// `E_{n+1} - E_n = 1 - 2n/p`, absent for the top level.
    pub gap: Option<Exact>,
}

/// `E_n = n - n(n-1)/p` with multiplicity `n + 1`, `n = 0..=p`.
pub fn toy_energy(p: u32, n: u32) -> Exact {
    let (p, n) = (p as i64, n as i64);
    Exact::from_i64(n) - Exact::ratio(n * (n - 1), p)
}

pub fn toy_levels(p: u32) -> Vec<ToyLevel> {
    (0..=p)
        .map(|n| ToyLevel {
            n,
            energy: toy_energy(p, n),
            mult: n as usize + 1,
            gap: (n < p).then(|| Exact::one() - Exact::ratio(2 * n as i64, p as i64)),
        })
        .collect()
}

/// Merged spectrum of the two-mode toy model from the closed form.
pub fn toy_spectrum(p: u32) -> SpectrumReport {
    let values = toy_levels(p)
        .into_iter()
        .flat_map(|l| std::iter::repeat_n(l.energy, l.mult))
        .collect();
    SpectrumReport::from_exact(values)
}

/// Spectrum of `H = sum_ij t_ij a_i^+ a_j^-` in the orthonormal basis.
pub fn quadratic_hamiltonian_spectrum(spec: AlgebraSpec, table: &[Vec<f64>]) -> Result<SpectrumReport> {
    let h = quadratic_hamiltonian(spec, table)?;
    Ok(SpectrumReport::from_float(symmetric_eigenvalues(&h)))
}

/// Assembles the orthonormal-basis matrix of `sum_ij t_ij a_i^+ a_j^-`.
pub fn quadratic_hamiltonian(spec: AlgebraSpec, table: &[Vec<f64>]) -> Result<SparseMatrix<f64>> {
    let n = spec.n();
    let cols = table.first().map_or(0, Vec::len);
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(Error::TableShape { rows: table.len(), cols, n });
    }
    for i in 0..n {
        for j in 0..i {
            let scale = table[i][j].abs().max(table[j][i].abs()).max(1.0);
            if (table[i][j] - table[j][i]).abs() > 1e-12 * scale {
                return Err(Error::AsymmetricTable { row: i + 1, col: j + 1 });
            }
        }
    }
    let space = FockSpace::new(spec);
    let g = Generators::normalized(&space);
    let dim = space.dimension();
    let mut h = SparseMatrix::zeros(dim, dim);
    for i in 0..n {
        for j in 0..n {
            if table[i][j] != 0.0 {
                h = h.combine(&g.creation[i].matmul(&g.annihilation[j]), table[i][j]);
            }
        }
    }
    let deviation = h.sub(&h.transpose()).max_abs();
    if deviation > SYMMETRY_TOLERANCE {
        return Err(Error::AsymmetricHamiltonian { deviation });
    }
    Ok(h)
}

/// Eigenvalues of a real symmetric matrix, ascending.
pub fn symmetric_eigenvalues(h: &SparseMatrix<f64>) -> Vec<f64> {
    let dim = h.nrows();
    let mut dense = DMatrix::<f64>::zeros(dim, dim);
    for (r, c, v) in h.entries() {
        dense[(r, c)] = *v;
    }
    let mut values: Vec<f64> = SymmetricEigen::new(dense).eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}
