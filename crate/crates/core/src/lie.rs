//! Bilinears `e_ij` and the gl(1|n) / gl(1+n) structure of the Fock space.
//!
//! `e_ij = p {a_i^+, a_j^-}` for fermions and `p [a_i^+, a_j^-]` for bosons.
//! The generators are identified with matrix units `E_ab`, `a, b = 0..=n`:
//!
//! * `E_i0 = sqrt(p) a_i^+`, `E_0i = sqrt(p) a_i^-`,
//! * `E_ij = e_ij` for `i != j`,
//! * `E_00 = p - N`, `E_ii = e_ii - E_00` (Fermi) or `e_ii + E_00` (Bose).
//!
//! `sqrt(p)` is irrational in general, so the exact backend stores
//! `A_ab = E_ab / p^{w_ab / 2}` with `w_ab = 1` when exactly one index is 0,
//! and checks each bracket after multiplying through by the right power
//! of `p`. Under that rescaling every term has integer powers of `p`.

use serde::{Deserialize, Serialize};

use crate::basis::{AlgebraSpec, Kind};
use crate::error::Result;
use crate::linalg::{invariant_span_rank, unit_vector};
use crate::operators::{normalize, ExactOperator, FockSpace, Generators, Normalization, Operator};
use crate::par::{self, Execution};
use crate::relations::{sort_reports, Backend, RelationReport};
use crate::scalar::{Exact, Scalar};
use crate::sparse::SparseMatrix;

/// `e_ij` with 0-based mode indices.
#[derive(Debug, Clone, PartialEq)]
pub struct EijOperator<T> {
    pub i: usize,
    pub j: usize,
    pub matrix: SparseMatrix<T>,
}

fn eij_matrix<T: Scalar>(g: &Generators<T>, i: usize, j: usize) -> SparseMatrix<T> {
    g.creation[i]
        .bracket(&g.annihilation[j], g.exchange_sign())
        .scale(&g.p())
}

pub fn build_eij<T: Scalar>(g: &Generators<T>, i: usize, j: usize) -> Result<EijOperator<T>> {
    g.spec.check_mode(i)?;
    g.spec.check_mode(j)?;
    Ok(EijOperator {
        i,
        j,
        matrix: eij_matrix(g, i, j),
    })
}

/// Exact `e_ij` as an unnormalized-basis operator.
pub fn eij_operator(space: &FockSpace, i: usize, j: usize) -> Result<ExactOperator> {
    let g = Generators::exact(space);
    let e = build_eij(&g, i, j)?;
    Ok(Operator::new(space.tag(Normalization::Unnormalized), e.matrix))
}

/// All `e_ij` of one spec, `table[i][j]`.
pub fn eij_table<T: Scalar>(g: &Generators<T>) -> Vec<Vec<SparseMatrix<T>>> {
    let n = g.spec.n();
    (0..n)
        .map(|i| (0..n).map(|j| eij_matrix(g, i, j)).collect())
        .collect()
}

/// Eigenvalue of `e_ii` on a basis vector: `p - |θ| + θ_i` or `l_i + |l| - p`.
pub fn eii_eigenvalue(spec: AlgebraSpec, entries: &[u32], i: usize) -> i64 {
    let p = spec.p() as i64;
    let total: i64 = entries.iter().map(|&e| e as i64).sum();
    let occ = entries[i] as i64;
    match spec.kind() {
        Kind::Fermi => p - total + occ,
        Kind::Bose => occ + total - p,
    }
}

fn delta(a: usize, b: usize) -> bool {
    a == b
}

fn quadruples(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    out.push([i, j, k, l]);
                }
            }
        }
    }
    out
}

fn one_based(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|x| x + 1).collect()
}

/// `[e_ij, e_kl] - δ_jk e_il + δ_il e_kj` for every index quadruple.
pub fn check_gl_commutators<T: Scalar>(g: &Generators<T>, exec: Execution) -> Vec<RelationReport> {
    let e = eij_table(g);
    par::map(exec, &quadruples(g.spec.n()), |&[i, j, k, l]| {
        let mut r = e[i][j].commutator(&e[k][l]);
        if delta(j, k) {
            r = r.sub(&e[i][l]);
        }
        if delta(i, l) {
            r = r.add(&e[k][j]);
        }
        let scale = g.p() * g.p();
        RelationReport::from_residual("gl.commutator", g.spec, one_based(&[i, j, k, l]), &r, scale)
    })
}

/// `[e_ij, a_k^±]` against the adjoint-action formulas.
///
/// Fermi: `[e_ij, f_k^+] = δ_jk f_i^+ - δ_ij f_k^+`, `[e_ij, f_k^-] = -δ_ik f_j^- + δ_ij f_k^-`.
/// Bose:  `[e_ij, b_k^+] = δ_jk b_i^+ + δ_ij b_k^+`, `[e_ij, b_k^-] = -δ_ik b_j^- - δ_ij b_k^-`.
pub fn check_adjoint_action<T: Scalar>(g: &Generators<T>) -> Vec<RelationReport> {
    let n = g.spec.n();
    let e = eij_table(g);
    // sign of the δ_ij term on the creation side
    let diag_sign = T::from_i64(match g.spec.kind() {
        Kind::Fermi => -1,
        Kind::Bose => 1,
    });
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut plus = e[i][j].commutator(&g.creation[k]);
                let mut minus = e[i][j].commutator(&g.annihilation[k]);
                if delta(j, k) {
                    plus = plus.sub(&g.creation[i]);
                }
                if delta(i, k) {
                    minus = minus.add(&g.annihilation[j]);
                }
                if delta(i, j) {
                    plus = plus.combine(&g.creation[k], -diag_sign.clone());
                    minus = minus.combine(&g.annihilation[k], diag_sign.clone());
                }
                let idx = one_based(&[i, j, k]);
                let scale = g.p();
                out.push(RelationReport::from_residual("adjoint.creation", g.spec, idx.clone(), &plus, scale.clone()));
                out.push(RelationReport::from_residual("adjoint.annihilation", g.spec, idx, &minus, scale));
            }
        }
    }
    out
}

/// Diagonal of `e_ii` against its eigenvalue formula, and `trace(e_ii)`
/// computed from the formula against the matrix trace.
pub fn check_eij_diagonal(space: &FockSpace, g: &Generators<Exact>) -> Vec<RelationReport> {
    let spec = g.spec;
    let mut out = Vec::new();
    for i in 0..spec.n() {
        let e = eij_matrix(g, i, i);
        let expected = SparseMatrix::from_diagonal(
            space
                .basis()
                .states()
                .iter()
                .map(|v| Exact::from_i64(eii_eigenvalue(spec, v.entries(), i))),
        );
        let r = e.sub(&expected);
        out.push(RelationReport::from_residual("eij.diagonal", spec, vec![i + 1, i + 1], &r, Exact::one()));
        let formula_trace: i64 = space
            .basis()
            .states()
            .iter()
            .map(|v| eii_eigenvalue(spec, v.entries(), i))
            .sum();
        let diff = (e.trace() - Exact::from_i64(formula_trace)).abs();
        out.push(RelationReport::from_value("eij.trace", spec, vec![i + 1, i + 1], diff, Exact::one()));
    }
    out
}

/// Orthonormal-basis `e_ij` (`i != j`) against the closed-form actions:
/// Fermi `θ_j (1-θ_i)` times a sign from the occupations strictly between
/// the two modes; Bose `sqrt((l_i + 1) l_j)`.
pub fn check_eij_offdiagonal(space: &FockSpace, g: &Generators<Exact>) -> Vec<RelationReport> {
    let spec = g.spec;
    let gram = space.gram();
    let basis = space.basis();
    let mut out = Vec::new();
    for i in 0..spec.n() {
        for j in 0..spec.n() {
            if i == j {
                continue;
            }
            let op = Operator::new(space.tag(Normalization::Unnormalized), eij_matrix(g, i, j));
            let normalized = normalize(&op, &gram).expect("same basis");
            let mut expected = SparseMatrix::<f64>::zeros(basis.dimension(), basis.dimension());
            for (c, v) in basis.states().iter().enumerate() {
                let Some(target) = v.shifted(j, -1).and_then(|w| w.shifted(i, 1)) else {
                    continue;
                };
                let th = v.entries();
                let value = match spec.kind() {
                    Kind::Fermi => {
                        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
                        let between: u32 = th[lo..hi].iter().sum();
                        let sign = if between.is_multiple_of(2) { 1.0 } else { -1.0 };
                        if i < j {
                            sign
                        } else {
                            -sign
                        }
                    }
                    Kind::Bose => (((th[i] + 1) * th[j]) as f64).sqrt(),
                };
                let r = basis.rank(&target).expect("grade preserved");
                expected.add_to(r, c, value);
            }
            let res = normalized.matrix().sub(&expected);
            out.push(RelationReport::from_residual("eij.offdiagonal", spec, vec![i + 1, j + 1], &res, spec.p() as f64));
        }
    }
    out
}

/// Images `A_ab` of the gl(1|n) / gl(1+n) matrix units, rescaled so that
/// `E_ab = p^{w_ab/2} A_ab`.
#[derive(Debug, Clone)]
pub struct GlImages<T> {
    pub spec: AlgebraSpec,
    /// `units[a][b]` for `a, b = 0..=n`.
    pub units: Vec<Vec<SparseMatrix<T>>>,
}

/// 1 if exactly one of the two labels is the distinguished index 0.
pub fn half_power(a: usize, b: usize) -> u32 {
    u32::from((a == 0) != (b == 0))
}

/// Superalgebra degree of `E_ab`: odd iff exactly one label is 0 (Fermi only).
pub fn degree(kind: Kind, a: usize, b: usize) -> u32 {
    match kind {
        Kind::Fermi => half_power(a, b),
        Kind::Bose => 0,
    }
}

impl<T: Scalar> GlImages<T> {
    pub fn new(g: &Generators<T>) -> Self {
        let n = g.spec.n();
        let e = eij_table(g);
        let p = g.p();
        let e00 = g.identity().scale(&p).sub(&g.number);
        let mut units = vec![vec![SparseMatrix::zeros(g.dimension(), g.dimension()); n + 1]; n + 1];
        for i in 1..=n {
            units[i][0] = g.creation[i - 1].clone();
            units[0][i] = g.annihilation[i - 1].clone();
            for j in 1..=n {
                units[i][j] = if i != j {
                    e[i - 1][j - 1].clone()
                } else {
                    match g.spec.kind() {
                        Kind::Fermi => e[i - 1][i - 1].sub(&e00),
                        Kind::Bose => e[i - 1][i - 1].add(&e00),
                    }
                };
            }
        }
        units[0][0] = e00;
        Self { spec: g.spec, units }
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    /// Residual of `[[E_ab, E_cd]] = δ_bc E_ad - (-1)^{deg deg} δ_ad E_cb`,
    /// with every term multiplied by `p^{-q/2}`, `q = (w_ab + w_cd) mod 2`.
    pub fn bracket_residual(&self, [a, b, c, d]: [usize; 4]) -> SparseMatrix<T> {
        let kind = self.spec.kind();
        let p = T::from_i64(self.spec.p() as i64);
        let sign = if degree(kind, a, b) * degree(kind, c, d) == 1 { -1 } else { 1 };
        let total = half_power(a, b) + half_power(c, d);
        let base = total % 2;
        let lhs_power = (total - base) / 2;
        let mut r = self.units[a][b].bracket(&self.units[c][d], sign);
        for _ in 0..lhs_power {
            r = r.scale(&p);
        }
        let term = |x: usize, y: usize| {
            let w = half_power(x, y);
            assert!(w >= base && (w - base).is_multiple_of(2), "mixed half-integer powers of p");
            let mut m = self.units[x][y].clone();
            for _ in 0..(w - base) / 2 {
                m = m.scale(&p);
            }
            m
        };
        if b == c {
            r = r.sub(&term(a, d));
        }
        if a == d {
            r = r.combine(&term(c, b), T::from_i64(sign));
        }
        r
    }
}

fn labels4(n: usize) -> Vec<[usize; 4]> {
    quadruples(n + 1)
}

/// Full bracket table in the p-rescaled form.
pub fn check_bracket_table<T: Scalar>(images: &GlImages<T>, exec: Execution) -> Vec<RelationReport> {
    let p = T::from_i64(images.spec.p() as i64);
    par::map(exec, &labels4(images.n()), |&idx| {
        let r = images.bracket_residual(idx);
        RelationReport::from_residual("identify.bracket", images.spec, idx.to_vec(), &r, p.clone() * p.clone())
    })
}

/// Bracket table with the literal `sqrt(p)` scaling of the odd/off-row units.
pub fn check_bracket_table_literal(images: &GlImages<f64>, exec: Execution) -> Vec<RelationReport> {
    let kind = images.spec.kind();
    let root = (images.spec.p() as f64).sqrt();
    let n = images.n();
    let literal: Vec<Vec<SparseMatrix<f64>>> = (0..=n)
        .map(|a| {
            (0..=n)
                .map(|b| {
                    let m = &images.units[a][b];
                    if half_power(a, b) == 1 {
                        m.scale(&root)
                    } else {
                        m.clone()
                    }
                })
                .collect()
        })
        .collect();
    par::map(exec, &labels4(n), |&[a, b, c, d]| {
        let sign = if degree(kind, a, b) * degree(kind, c, d) == 1 { -1 } else { 1 };
        let mut r = literal[a][b].bracket(&literal[c][d], sign);
        if b == c {
            r = r.sub(&literal[a][d]);
        }
        if a == d {
            r = r.combine(&literal[c][b], sign as f64);
        }
        let scale = (images.spec.p() as f64).powi(2);
        RelationReport::from_residual("identify.bracket", images.spec, vec![a, b, c, d], &r, scale)
    })
}

/// `(λ_0; λ_1, ..., λ_n)`: eigenvalues of `(E_00; E_11, ..., E_nn)` on the vacuum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightVector {
    pub coordinates: Vec<i64>,
}

impl std::fmt::Display for WeightVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({};", self.coordinates[0])?;
        let rest: Vec<String> = self.coordinates[1..].iter().map(|c| c.to_string()).collect();
        write!(f, " {})", rest.join(","))
    }
}

/// Weight of the vacuum read off the exact diagonal units; `None` if the
/// vacuum is not a joint eigenvector.
pub fn vacuum_weight(images: &GlImages<Exact>) -> Option<WeightVector> {
    let dim = images.units[0][0].nrows();
    let vac = unit_vector(dim, 0);
    let mut coordinates = Vec::new();
    for a in 0..=images.n() {
        let image = images.units[a][a].apply(&vac);
        if image.iter().skip(1).any(|x| !Scalar::is_zero(x)) {
            return None;
        }
        let value = &image[0];
        if !value.is_integer() {
            return None;
        }
        coordinates.push(num_traits::ToPrimitive::to_i64(&value.to_integer())?);
    }
    Some(WeightVector { coordinates })
}

/// Identity resolution, `N = sum E_ii`, root-vector property, highest weight
/// and generator supertraces.
pub fn check_identification_extras<T: Scalar>(images: &GlImages<T>, g: &Generators<T>) -> Vec<RelationReport> {
    let spec = g.spec;
    let n = spec.n();
    let p = g.p();
    let mut out = Vec::new();

    let mut sum_diag = SparseMatrix::zeros(g.dimension(), g.dimension());
    for i in 1..=n {
        sum_diag = sum_diag.add(&images.units[i][i]);
    }
    let resolution = images.units[0][0].add(&sum_diag).sub(&g.identity().scale(&p));
    out.push(RelationReport::from_residual("identify.identity", spec, vec![], &resolution, p.clone()));
    let number = g.number.sub(&sum_diag);
    out.push(RelationReport::from_residual("identify.number", spec, vec![], &number, p.clone()));

    for i in 0..n {
        // creation lowers the E_00 eigenvalue by one, annihilation raises it
        let lower = images.units[0][0].commutator(&g.creation[i]).add(&g.creation[i]);
        let raise = images.units[0][0].commutator(&g.annihilation[i]).sub(&g.annihilation[i]);
        out.push(RelationReport::from_residual("root.creation", spec, vec![i + 1], &lower, p.clone()));
        out.push(RelationReport::from_residual("root.annihilation", spec, vec![i + 1], &raise, p.clone()));
    }

    let vac = {
        let mut v = vec![T::zero(); g.dimension()];
        v[0] = T::one();
        v
    };
    let mut worst = T::zero();
    for a in 0..=n {
        let expected = if a == 0 { p.clone() } else { T::zero() };
        for (idx, x) in images.units[a][a].apply(&vac).into_iter().enumerate() {
            let target = if idx == 0 { expected.clone() } else { T::zero() };
            let diff = (x - target).abs();
            if diff > worst {
                worst = diff;
            }
        }
    }
    out.push(RelationReport::from_value("highest_weight", spec, vec![], worst, p.clone()));

    let str_max = generator_images(spec.kind(), n)
        .iter()
        .map(|(_, m)| supertrace(spec.kind(), m).abs())
        .max()
        .unwrap_or(0);
    out.push(RelationReport::from_value("identify.supertrace", spec, vec![], T::from_i64(str_max), T::one()));
    out
}

/// Coefficient matrices (over `E_ab`, up to the `1/sqrt(p)` factor of the
/// ladder operators) of the generator images `a_i^±` and `e_ij`.
pub fn generator_images(kind: Kind, n: usize) -> Vec<(String, Vec<Vec<i64>>)> {
    let unit = |a: usize, b: usize| {
        let mut m = vec![vec![0i64; n + 1]; n + 1];
        m[a][b] = 1;
        m
    };
    let mut out = Vec::new();
    for i in 1..=n {
        out.push((format!("a{i}+"), unit(i, 0)));
        out.push((format!("a{i}-"), unit(0, i)));
        for j in 1..=n {
            let mut m = unit(i, j);
            if i == j {
                m[0][0] = match kind {
                    Kind::Fermi => 1,
                    Kind::Bose => -1,
                };
            }
            out.push((format!("e{i}{j}"), m));
        }
    }
    out
}

/// `c_00 - sum c_ii` for gl(1|n), ordinary trace for gl(1+n).
pub fn supertrace(kind: Kind, m: &[Vec<i64>]) -> i64 {
    let rest: i64 = (1..m.len()).map(|i| m[i][i]).sum();
    match kind {
        Kind::Fermi => m[0][0] - rest,
        Kind::Bose => m[0][0] + rest,
    }
}

/// One grade block of the gl(1) ⊕ gl(n) decomposition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BranchingBlock {
    pub grade: u32,
    pub dimension: usize,
    pub expected_dimension: usize,
    pub e00_value: i64,
    pub invariant: bool,
    pub span_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BranchingReport {
    pub spec: AlgebraSpec,
    pub blocks: Vec<BranchingBlock>,
    pub pass: bool,
}

/// Grade blocks: `E_00 = p - k` on grade `k`, sizes `C(n,k)` / `C(n+k-1,k)`,
/// each block stable under every `e_ij` and spanned from any one of its
/// vectors (irreducibility witness).
pub fn check_branching(space: &FockSpace, g: &Generators<Exact>) -> BranchingReport {
    let spec = g.spec;
    let images = GlImages::new(g);
    let e = eij_table(g);
    let ops: Vec<&SparseMatrix<Exact>> = e.iter().flatten().collect();
    let basis = space.basis();
    let expected = spec.graded_dimensions();
    let blocks: Vec<BranchingBlock> = (0..=spec.p())
        .map(|k| {
            let range = basis.grade_range(k);
            let e00_values: Vec<Exact> = range.clone().map(|r| images.units[0][0].get(r, r)).collect();
            let e00_value = (spec.p() - k) as i64;
            let e00_ok = e00_values.iter().all(|v| *v == Exact::from_i64(e00_value))
                && range.clone().all(|r| images.units[0][0].row(r).len() <= 1);
            let invariant = e00_ok
                && ops.iter().all(|m| {
                    m.entries()
                        .filter(|&(_, c, _)| range.contains(&c))
                        .all(|(r, _, _)| range.contains(&r))
                });
            let span_rank = if range.is_empty() {
                0
            } else {
                invariant_span_rank(&unit_vector(basis.dimension(), range.start), &ops)
            };
            BranchingBlock {
                grade: k,
                dimension: range.len(),
                expected_dimension: expected[k as usize],
                e00_value,
                invariant,
                span_rank,
            }
        })
        .collect();
    let pass = blocks
        .iter()
        .all(|b| b.invariant && b.dimension == b.expected_dimension && b.span_rank == b.dimension);
    BranchingReport { spec, blocks, pass }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LieCheck {
    Brackets,
    Identify,
    Branching,
    All,
}

/// Combined outcome of the Lie-structure checks on one spec.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LieReport {
    pub spec: AlgebraSpec,
    pub reports: Vec<RelationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branching: Option<BranchingReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vacuum_weight: Option<WeightVector>,
}

impl LieReport {
    pub fn pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass) && self.branching.as_ref().is_none_or(|b| b.pass)
    }
}

pub fn run_lie_checks(spec: AlgebraSpec, check: LieCheck, backend: Backend, exec: Execution) -> LieReport {
    let space = FockSpace::new(spec);
    let brackets = matches!(check, LieCheck::Brackets | LieCheck::All);
    let identify = matches!(check, LieCheck::Identify | LieCheck::All);
    let branching = matches!(check, LieCheck::Branching | LieCheck::All);
    let exact = Generators::exact(&space);
    let mut reports = Vec::new();
    let mut weight = None;
    match backend {
        Backend::Exact => {
            if brackets {
                reports.extend(check_gl_commutators(&exact, exec));
                reports.extend(check_adjoint_action(&exact));
                reports.extend(check_eij_diagonal(&space, &exact));
                reports.extend(check_eij_offdiagonal(&space, &exact));
            }
            if identify {
                let images = GlImages::new(&exact);
                reports.extend(check_bracket_table(&images, exec));
                reports.extend(check_identification_extras(&images, &exact));
                weight = vacuum_weight(&images);
            }
        }
        Backend::Float => {
            let g = Generators::normalized(&space);
            if brackets {
                reports.extend(check_gl_commutators(&g, exec));
                reports.extend(check_adjoint_action(&g));
            }
            if identify {
                let images = GlImages::new(&g);
                reports.extend(check_bracket_table_literal(&images, exec));
                reports.extend(check_identification_extras(&images, &g));
                weight = vacuum_weight(&GlImages::new(&exact));
            }
        }
    }
    sort_reports(&mut reports);
    LieReport {
        spec,
        reports,
        branching: branching.then(|| check_branching(&space, &exact)),
        vacuum_weight: weight,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::OccupationVector;

    fn gens(spec: AlgebraSpec) -> (FockSpace, Generators<Exact>) {
        let s = FockSpace::new(spec);
        let g = Generators::exact(&s);
        (s, g)
    }

    fn diag_at(s: &FockSpace, m: &SparseMatrix<Exact>, entries: &[u32]) -> Exact {
        let v = OccupationVector::new(s.spec().kind(), entries.to_vec()).unwrap();
        let r = s.basis().rank(&v).unwrap();
        m.get(r, r)
    }

    #[test]
    fn eij_examples() {
        let (s, g) = gens(AlgebraSpec::fermi(2, 2).unwrap());
        let e11 = build_eij(&g, 0, 0).unwrap();
        assert_eq!(diag_at(&s, &e11.matrix, &[1, 0]), Exact::from_i64(2));
        assert_eq!(diag_at(&s, &e11.matrix, &[0, 0]), Exact::from_i64(2));
        let e12 = build_eij(&g, 0, 1).unwrap();
        assert!(e12.matrix.apply(&unit_vector(s.dimension(), 0)).iter().all(|x| Scalar::is_zero(x)));

        let (s, g) = gens(AlgebraSpec::bose(2, 2).unwrap());
        let e11 = build_eij(&g, 0, 0).unwrap();
        assert_eq!(diag_at(&s, &e11.matrix, &[1, 1]), Exact::from_i64(1));
        assert_eq!(diag_at(&s, &e11.matrix, &[0, 0]), Exact::from_i64(-2));
        assert!(build_eij(&g, 0, 2).is_err());
    }

    #[test]
    fn gl_commutator_examples() {
        let (_, g) = gens(AlgebraSpec::fermi(2, 1).unwrap());
        let e = eij_table(&g);
        assert_eq!(e[0][1].commutator(&e[1][0]), e[0][0].sub(&e[1][1]));
        assert!(e[0][1].commutator(&e[0][1]).is_zero());
        let (_, g) = gens(AlgebraSpec::bose(3, 2).unwrap());
        let reports = check_gl_commutators(&g, Execution::Parallel);
        assert_eq!(reports.len(), 81);
        assert!(reports.iter().all(|r| r.pass && r.residual.is_exact_zero()));
    }

    #[test]
    fn adjoint_action_examples() {
        let (_, g) = gens(AlgebraSpec::fermi(2, 2).unwrap());
        let e = eij_table(&g);
        assert_eq!(e[0][1].commutator(&g.creation[1]), g.creation[0]);
        assert!(e[0][0].commutator(&g.creation[0]).is_zero());
        let (_, g) = gens(AlgebraSpec::bose(2, 3).unwrap());
        let e = eij_table(&g);
        assert_eq!(e[0][0].commutator(&g.creation[0]), g.creation[0].scale(&Exact::from_i64(2)));
    }

    #[test]
    fn identification_examples() {
        let (_, g) = gens(AlgebraSpec::fermi(2, 3).unwrap());
        let img = GlImages::new(&g);
        // {E_10, E_01} = E_11 + E_00, i.e. p {f_1^+, f_1^-} = e_11
        let lhs = img.units[1][0].anticommutator(&img.units[0][1]).scale(&g.p());
        assert_eq!(lhs, img.units[1][1].add(&img.units[0][0]));
        assert!(img.bracket_residual([1, 0, 0, 1]).is_zero());

        let (_, g) = gens(AlgebraSpec::bose(2, 3).unwrap());
        let img = GlImages::new(&g);
        let lhs = img.units[1][0].commutator(&img.units[0][1]).scale(&g.p());
        assert_eq!(lhs, img.units[1][1].sub(&img.units[0][0]));

        for spec in [AlgebraSpec::fermi(3, 2).unwrap(), AlgebraSpec::bose(3, 2).unwrap()] {
            let (_, g) = gens(spec);
            let img = GlImages::new(&g);
            let mut sum = img.units[0][0].clone();
            for i in 1..=3 {
                sum = sum.add(&img.units[i][i]);
            }
            assert_eq!(sum, g.identity().scale(&g.p()));
            assert_eq!(vacuum_weight(&img).unwrap().coordinates, vec![2, 0, 0, 0]);
        }
    }

    #[test]
    fn wrong_sign_convention_is_detected() {
        // using commutators for the odd-odd brackets must fail for fermions
        let (_, g) = gens(AlgebraSpec::fermi(2, 2).unwrap());
        let img = GlImages::new(&g);
        let wrong = img.units[1][0]
            .commutator(&img.units[0][1])
            .scale(&g.p())
            .sub(&img.units[1][1])
            .add(&img.units[0][0]);
        assert!(!wrong.is_zero());
    }

    #[test]
    fn branching_examples() {
        let spec = AlgebraSpec::fermi(4, 2).unwrap();
        let (s, g) = gens(spec);
        let b = check_branching(&s, &g);
        assert!(b.pass);
        assert_eq!(b.blocks.iter().map(|x| x.dimension).collect::<Vec<_>>(), vec![1, 4, 6]);
        assert_eq!(b.blocks.iter().map(|x| x.e00_value).collect::<Vec<_>>(), vec![2, 1, 0]);
        let (s, g) = gens(AlgebraSpec::bose(2, 2).unwrap());
        let b = check_branching(&s, &g);
        assert!(b.pass);
        assert_eq!(b.blocks.iter().map(|x| x.dimension).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(b.blocks[0].span_rank, 1);
    }

    #[test]
    fn generator_supertraces_vanish() {
        for kind in [Kind::Fermi, Kind::Bose] {
            for (_, m) in generator_images(kind, 3) {
                assert_eq!(supertrace(kind, &m), 0);
            }
        }
    }

    #[test]
    fn full_lie_suite_on_small_specs() {
        for spec in [AlgebraSpec::fermi(3, 2).unwrap(), AlgebraSpec::bose(2, 3).unwrap()] {
            for backend in [Backend::Exact, Backend::Float] {
                let r = run_lie_checks(spec, LieCheck::All, backend, Execution::Parallel);
                assert!(r.pass(), "{spec} {backend:?}: {:?}", r.reports.iter().find(|x| !x.pass));
            }
        }
    }
}
