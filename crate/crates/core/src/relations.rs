//! Defining relations and structural properties checked as matrix
//! identities in the Fock representation.
//!
//! Every check builds a residual matrix that must vanish. In the exact
//! backend "vanish" means the zero rational; in the float backend the
//! largest residual entry must stay below `1e-12` times the scale of the
//! terms involved.

use serde::{Deserialize, Serialize};

use crate::basis::{AlgebraSpec, Kind};
use crate::error::{Error, Result};
use crate::linalg::{invariant_span_rank, unit_vector};
use crate::operators::{adjoint_wrt_gram, normalize, FockSpace, Generators};
use crate::par::{self, Execution};
use crate::scalar::{Exact, Residual, Scalar};
use crate::sparse::SparseMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    #[default]
    Exact,
    Float,
}

/// Outcome of one relation on one spec and index tuple.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    pub relation: String,
    pub spec: AlgebraSpec,
    /// 1-based mode (or Lie label) indices.
    pub indices: Vec<usize>,
    pub residual: Residual,
    pub pass: bool,
}

impl RelationReport {
    /// Report for residual matrix `residual`, judged against the terms' scale.
    pub fn from_residual<T: Scalar>(
        relation: impl Into<String>,
        spec: AlgebraSpec,
        indices: Vec<usize>,
        residual: &SparseMatrix<T>,
        scale: T,
    ) -> Self {
        let max = residual.max_abs();
        Self::from_value(relation, spec, indices, max, scale)
    }

    pub fn from_value<T: Scalar>(
        relation: impl Into<String>,
        spec: AlgebraSpec,
        indices: Vec<usize>,
        value: T,
        scale: T,
    ) -> Self {
        let scale = if scale > T::one() { scale } else { T::one() };
        let pass = value <= T::tolerance() * scale;
        Self {
            relation: relation.into(),
            spec,
            indices,
            residual: value.residual(),
            pass,
        }
    }

    fn sort_key(&self) -> (AlgebraSpec, &str, &[usize]) {
        (self.spec, &self.relation, &self.indices)
    }
}

/// Canonical report order: spec, then relation id, then indices.
pub fn sort_reports(reports: &mut [RelationReport]) {
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

fn scale_of<T: Scalar>(mats: &[&SparseMatrix<T>]) -> T {
    mats.iter()
        .map(|m| m.max_abs())
        .fold(T::one(), |acc, v| if v > acc { v } else { acc })
}

/// `{a_i^+, a_j^+}` / `[a_i^+, a_j^+]` and the annihilation analogue vanish, `i <= j`.
pub fn check_pp<T: Scalar>(g: &Generators<T>) -> Vec<RelationReport> {
    let n = g.spec.n();
    let sign = g.exchange_sign();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            for (id, ops) in [("pp.creation", &g.creation), ("pp.annihilation", &g.annihilation)] {
                let r = ops[i].bracket(&ops[j], sign);
                let scale = scale_of(&[&ops[i], &ops[j]]);
                out.push(RelationReport::from_residual(id, g.spec, vec![i + 1, j + 1], &r, scale));
            }
        }
    }
    out
}

/// `[N, a_i^+] - a_i^+` and `[N, a_i^-] + a_i^-` vanish.
pub fn check_number<T: Scalar>(g: &Generators<T>) -> Vec<RelationReport> {
    let mut out = Vec::new();
    for i in 0..g.spec.n() {
        let plus = g.number.commutator(&g.creation[i]).sub(&g.creation[i]);
        let minus = g.number.commutator(&g.annihilation[i]).add(&g.annihilation[i]);
        let scale = g.p();
        out.push(RelationReport::from_residual("number.creation", g.spec, vec![i + 1], &plus, scale.clone()));
        out.push(RelationReport::from_residual("number.annihilation", g.spec, vec![i + 1], &minus, scale));
    }
    out
}

/// Residual of the deformed mixed relation
/// `(1 - (N-1)/p) a_i^- a_j^+ ± (1 - N/p) a_j^+ a_i^- - δ_ij (1 - N/p)(1 - (N-1)/p)`,
/// `+` for fermions, `-` for bosons. Coefficients in `N` multiply from the left.
pub fn mixed_residual<T: Scalar>(g: &Generators<T>, i: usize, j: usize) -> SparseMatrix<T> {
    let inv_p = T::ratio(1, g.spec.p() as i64);
    let one = T::one();
    let upper = g.function_of_number(|k| one.clone() - (k.clone() - one.clone()) * inv_p.clone());
    let lower = g.function_of_number(|k| one.clone() - k.clone() * inv_p.clone());
    let down_up = g.annihilation[i].matmul(&g.creation[j]);
    let up_down = g.creation[j].matmul(&g.annihilation[i]);
    let sign = T::from_i64(-g.exchange_sign());
    let mut r = upper.matmul(&down_up).combine(&lower.matmul(&up_down), sign);
    if i == j {
        r = r.sub(&lower.matmul(&upper));
    }
    r
}

pub fn check_mixed<T: Scalar>(g: &Generators<T>) -> Vec<RelationReport> {
    let n = g.spec.n();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let r = mixed_residual(g, i, j);
            let scale = g.p() * g.p();
            out.push(RelationReport::from_residual("mixed", g.spec, vec![i + 1, j + 1], &r, scale));
        }
    }
    out
}

/// Creation operators vanish on the grade-`p` block and only ever raise
/// the grade by one. The residual collects every offending entry.
pub fn check_cap<T: Scalar>(space: &FockSpace, g: &Generators<T>) -> RelationReport {
    let basis = space.basis();
    let p = g.spec.p();
    let mut worst = T::zero();
    for plus in &g.creation {
        for (r, c, v) in plus.entries() {
            let at_cap = basis.grade_of(c) == p;
            let bad_shift = basis.grade_of(r) != basis.grade_of(c) + 1;
            if (at_cap || bad_shift) && v.abs() > worst {
                worst = v.abs();
            }
        }
    }
    RelationReport::from_value("cap", g.spec, vec![], worst, T::one())
}

/// Exact hermiticity: the Gram adjoint of `a_i^+` is `a_i^-`, and `N` is self-adjoint.
pub fn check_hermiticity_exact(space: &FockSpace) -> Vec<RelationReport> {
    let spec = space.spec();
    let gram = space.gram();
    let mut out = Vec::new();
    for i in 0..spec.n() {
        let plus = space.creation(i).expect("mode in range");
        let minus = space.annihilation(i).expect("mode in range");
        let adj = adjoint_wrt_gram(&plus, &gram).expect("same basis");
        let r = adj.matrix().sub(minus.matrix());
        out.push(RelationReport::from_residual("hermiticity", spec, vec![i + 1], &r, Exact::one()));
    }
    let num = space.number(crate::operators::Normalization::Unnormalized);
    let adj = adjoint_wrt_gram(&num, &gram).expect("same basis");
    let r = adj.matrix().sub(num.matrix());
    out.push(RelationReport::from_residual("hermiticity.number", spec, vec![], &r, Exact::one()));
    out
}

/// Orthonormal-basis hermiticity: `(a_i^+)^T = a_i^-`, `N^T = N`.
pub fn check_hermiticity_float(g: &Generators<f64>) -> Vec<RelationReport> {
    let mut out: Vec<RelationReport> = (0..g.spec.n())
        .map(|i| {
            let r = g.creation[i].transpose().sub(&g.annihilation[i]);
            RelationReport::from_residual("hermiticity", g.spec, vec![i + 1], &r, 1.0)
        })
        .collect();
    let r = g.number.transpose().sub(&g.number);
    out.push(RelationReport::from_residual("hermiticity.number", g.spec, vec![], &r, 1.0));
    out
}

/// Dimension of the span of the vacuum under all `a_i^±`; the Fock space is
/// irreducible when it equals the full dimension.
pub fn vacuum_span_rank(g: &Generators<Exact>) -> usize {
    let ops: Vec<&SparseMatrix<Exact>> = g.creation.iter().chain(&g.annihilation).collect();
    invariant_span_rank(&unit_vector(g.dimension(), 0), &ops)
}

pub fn check_irreducibility(g: &Generators<Exact>) -> RelationReport {
    let missing = g.dimension() - vacuum_span_rank(g);
    RelationReport::from_value("irreducibility", g.spec, vec![], Exact::from_i64(missing as i64), Exact::one())
}

/// Closed-form orthonormal generators against exact-then-normalized ones.
pub fn check_backend_agreement(space: &FockSpace) -> Vec<RelationReport> {
    let spec = space.spec();
    let gram = space.gram();
    let mut out = Vec::new();
    for i in 0..spec.n() {
        let pairs = [
            ("agreement.creation", space.creation(i), space.normalized_creation(i)),
            ("agreement.annihilation", space.annihilation(i), space.normalized_annihilation(i)),
        ];
        for (id, exact, float) in pairs {
            let converted = normalize(&exact.expect("mode in range"), &gram).expect("same basis");
            let direct = float.expect("mode in range");
            let r = converted.matrix().sub(direct.matrix());
            let scale = scale_of(&[direct.matrix()]);
            out.push(RelationReport::from_residual(id, spec, vec![i + 1], &r, scale));
        }
    }
    out
}

/// Every relation check for one spec in the chosen backend, canonically sorted.
pub fn verify_spec(spec: AlgebraSpec, backend: Backend) -> Vec<RelationReport> {
    let space = FockSpace::new(spec);
    let mut out = match backend {
        Backend::Exact => {
            let g = Generators::exact(&space);
            let mut out = check_pp(&g);
            out.extend(check_number(&g));
            out.extend(check_mixed(&g));
            out.push(check_cap(&space, &g));
            out.extend(check_hermiticity_exact(&space));
            out.push(check_irreducibility(&g));
            out
        }
        Backend::Float => {
            let g = Generators::normalized(&space);
            let mut out = check_pp(&g);
            out.extend(check_number(&g));
            out.extend(check_mixed(&g));
            out.push(check_cap(&space, &g));
            out.extend(check_hermiticity_float(&g));
            out.extend(check_backend_agreement(&space));
            out
        }
    };
    sort_reports(&mut out);
    out
}

/// All specs with `kind` in `kinds`, `1 <= n <= n_max`, `1 <= p <= p_max`.
pub fn grid(kinds: &[Kind], n_max: usize, p_max: u32) -> Vec<AlgebraSpec> {
    let mut specs = Vec::new();
    for &kind in kinds {
        for n in 1..=n_max {
            for p in 1..=p_max {
                specs.push(AlgebraSpec::new(kind, n, p).expect("grid bounds are positive"));
            }
        }
    }
    specs
}

pub fn verify_specs(specs: &[AlgebraSpec], backend: Backend, exec: Execution) -> Vec<RelationReport> {
    let mut out = par::flat_map(exec, specs, |&spec| verify_spec(spec, backend));
    sort_reports(&mut out);
    out
}

/// Deviation from ordinary fermion/boson matrix elements at one cap.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitPoint {
    pub p: u32,
    pub deviation: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassicalLimitReport {
    pub kind: Kind,
    pub n: usize,
    pub window_cap: u32,
    pub points: Vec<LimitPoint>,
    pub within_bound: bool,
    pub nonincreasing: bool,
    pub strictly_decreasing: bool,
    pub pass: bool,
}

/// Sup-norm distance between the orthonormal `a_i^±` and the ordinary
/// `F_i^±` / `B_i^±` on the subspace of total occupation `<= window_cap`.
///
/// The capped entries come from the exact unnormalized coefficients rescaled
/// by `sqrt(g_row / g_col)`, so only the window (not the whole space) is built.
pub fn window_deviation(kind: Kind, n: usize, window_cap: u32, p: u32) -> Result<f64> {
    let window = FockSpace::new(AlgebraSpec::new(kind, n, window_cap)?);
    let basis = window.basis();
    let p_exact = Exact::from_i64(p as i64);
    let mut worst: f64 = 0.0;
    for v in basis.states() {
        let k = v.total() as i64;
        let g_col = crate::operators::norm_squared(p, v);
        for i in 0..n {
            let occ = v.entries()[i] as i64;
            // creation: unnormalized coefficient 1 (times sign)
            if let Some(up) = v.shifted(i, 1).filter(|u| u.total() <= window_cap) {
                let ratio = crate::operators::norm_squared(p, &up) / &g_col;
                let capped = ratio.to_f64().sqrt();
                let standard = match kind {
                    Kind::Fermi => 1.0,
                    Kind::Bose => ((occ + 1) as f64).sqrt(),
                };
                worst = worst.max((capped - standard).abs());
            }
            if let Some(down) = v.shifted(i, -1) {
                let coeff = Exact::from_i64(occ) * (p_exact.clone() - Exact::from_i64(k - 1)) / &p_exact;
                let ratio = crate::operators::norm_squared(p, &down) / &g_col;
                let capped = coeff.to_f64() * ratio.to_f64().sqrt();
                let standard = (occ as f64).sqrt();
                worst = worst.max((capped - standard).abs());
            }
        }
    }
    Ok(worst)
}

pub fn check_classical_limit(kind: Kind, n: usize, window_cap: u32, p_list: &[u32]) -> Result<ClassicalLimitReport> {
    let min_p = *p_list.iter().min().ok_or(Error::EmptyCapList)?;
    if window_cap >= min_p {
        return Err(Error::WindowTooLarge { window: window_cap, min_p });
    }
    let mut sorted = p_list.to_vec();
    sorted.sort_unstable();
    let constant = 2.0 * (window_cap as f64 + 1.0);
    let points = sorted
        .iter()
        .map(|&p| {
            Ok(LimitPoint {
                p,
                deviation: window_deviation(kind, n, window_cap, p)?,
                bound: constant / p as f64,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let within_bound = points.iter().all(|pt| pt.deviation <= pt.bound);
    let nonincreasing = points.windows(2).all(|w| w[1].deviation <= w[0].deviation);
    let strictly_decreasing = points.windows(2).all(|w| w[1].deviation < w[0].deviation);
    Ok(ClassicalLimitReport {
        kind,
        n,
        window_cap,
        points,
        within_bound,
        nonincreasing,
        strictly_decreasing,
        pass: within_bound && nonincreasing,
    })
}
