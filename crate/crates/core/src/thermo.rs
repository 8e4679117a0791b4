//! Character of the Fock space and free-particle grand-canonical sums.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::basis::{AlgebraSpec, FockBasis};
use crate::error::{Error, Result};
use crate::par::{self, Execution};

/// `Z(z) = sum_k c_k z^k` with `c_k` the number of states of total occupation `k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterPolynomial {
    pub spec: AlgebraSpec,
    pub coefficients: Vec<u64>,
    /// Multiplicity of each monomial `x_1^{v_1} ... x_n^{v_n}`.
    pub monomials: BTreeMap<Vec<u32>, u64>,
}

impl CharacterPolynomial {
    pub fn eval(&self, z: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * z + c as f64)
    }

    /// Number of states, `Z(1)`.
    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }
}

pub fn character(spec: AlgebraSpec) -> CharacterPolynomial {
    let basis = FockBasis::new(spec);
    let mut coefficients = vec![0u64; spec.p() as usize + 1];
    let mut monomials = BTreeMap::new();
    for v in basis.states() {
        coefficients[v.total() as usize] += 1;
        *monomials.entry(v.entries().to_vec()).or_insert(0) += 1;
    }
    CharacterPolynomial {
        spec,
        coefficients,
        monomials,
    }
}

/// Grand-canonical ensemble at fixed `beta`, single-mode energies and `mu`.
#[derive(Debug, Clone)]
pub struct Ensemble {
    basis: FockBasis,
    beta: f64,
    energies: Vec<f64>,
    mu: f64,
}

impl Ensemble {
    pub fn new(spec: AlgebraSpec, beta: f64, energies: &[f64], mu: f64) -> Result<Self> {
        Self::with_basis(FockBasis::new(spec), beta, energies, mu)
    }

    pub fn with_basis(basis: FockBasis, beta: f64, energies: &[f64], mu: f64) -> Result<Self> {
        if !(beta > 0.0) {
            return Err(Error::NonPositiveBeta(beta));
        }
        let n = basis.spec().n();
        if energies.len() != n {
            return Err(Error::EnergyCount {
                expected: n,
                found: energies.len(),
            });
        }
        Ok(Self {
            basis,
            beta,
            energies: energies.to_vec(),
            mu,
        })
    }

    /// `-beta (sum_i eps_i v_i - mu |v|)` per basis vector.
    fn log_weights(&self) -> Vec<f64> {
        self.basis
            .states()
            .iter()
            .map(|v| {
                let energy: f64 = v
                    .entries()
                    .iter()
                    .zip(&self.energies)
                    .map(|(&occ, &eps)| occ as f64 * eps)
                    .sum();
                -self.beta * (energy - self.mu * v.total() as f64)
            })
            .collect()
    }

    /// `ln Xi`, evaluated with the largest exponent factored out.
    pub fn ln_grand_partition(&self) -> f64 {
        let logs = self.log_weights();
        let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        top + logs.iter().map(|x| (x - top).exp()).sum::<f64>().ln()
    }

    pub fn grand_partition(&self) -> f64 {
        self.ln_grand_partition().exp()
    }

    /// `<v_i>` for every mode, plus `<|v|>` as the last element.
    pub fn mean_occupations(&self) -> (Vec<f64>, f64) {
        let logs = self.log_weights();
        let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let weights: Vec<f64> = logs.iter().map(|x| (x - top).exp()).collect();
        let norm: f64 = weights.iter().sum();
        let n = self.basis.spec().n();
        let mut means = vec![0.0; n];
        for (v, w) in self.basis.states().iter().zip(&weights) {
            for (m, &occ) in means.iter_mut().zip(v.entries()) {
                *m += occ as f64 * w;
            }
        }
        for m in means.iter_mut() {
            *m /= norm;
        }
        let total = means.iter().sum();
        (means, total)
    }
}

pub fn grand_partition(spec: AlgebraSpec, beta: f64, energies: &[f64], mu: f64) -> Result<f64> {
    Ok(Ensemble::new(spec, beta, energies, mu)?.grand_partition())
}

/// `<v_i>` for 0-based mode `i`.
pub fn mean_occupation(spec: AlgebraSpec, beta: f64, energies: &[f64], mu: f64, i: usize) -> Result<f64> {
    spec.check_mode(i)?;
    Ok(Ensemble::new(spec, beta, energies, mu)?.mean_occupations().0[i])
}

/// One row of a (beta, mu) sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThermoRow {
    pub beta: f64,
    pub mu: f64,
    pub xi: f64,
    pub mean_occupation: Vec<f64>,
    pub mean_total: f64,
}

/// Rows for every `(beta, mu)` pair, beta-major.
pub fn sweep(spec: AlgebraSpec, betas: &[f64], mus: &[f64], energies: &[f64], exec: Execution) -> Result<Vec<ThermoRow>> {
    let basis = FockBasis::new(spec);
    let points: Vec<(f64, f64)> = betas
        .iter()
        .flat_map(|&b| mus.iter().map(move |&m| (b, m)))
        .collect();
    par::map(exec, &points, |&(beta, mu)| {
        let ens = Ensemble::with_basis(basis.clone(), beta, energies, mu)?;
        let (mean_occupation, mean_total) = ens.mean_occupations();
        Ok(ThermoRow {
            beta,
            mu,
            xi: ens.grand_partition(),
            mean_occupation,
            mean_total,
        })
    })
    .into_iter()
    .collect()
}

/// CSV with columns beta, mu, Xi, mean_occ_1..n, mean_total.
pub fn sweep_csv(n: usize, rows: &[ThermoRow]) -> String {
    let mut out = String::from("beta,mu,Xi");
    for i in 1..=n {
        out.push_str(&format!(",mean_occ_{i}"));
    }
    out.push_str(",mean_total\n");
    for row in rows {
        out.push_str(&format!("{},{},{}", row.beta, row.mu, row.xi));
        for m in &row.mean_occupation {
            out.push_str(&format!(",{m}"));
        }
        out.push_str(&format!(",{}\n", row.mean_total));
    }
    out
}
