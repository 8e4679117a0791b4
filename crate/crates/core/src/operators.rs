//! Matrix representatives of the generalized creation, annihilation and
//! number operators.
//!
//! The exact backend works in the unnormalized basis `|v> = (a_1^+)^{v_1}
//! (a_2^+)^{v_2} ... |0>`, where every matrix element is rational:
//!
//! * `a_i^+ |v> = s |v + e_i>` if `|v| < p`, zero at the cap,
//! * `a_i^- |v> = s * v_i * (p - k + 1) / p |v - e_i>` with `k = |v|`,
//!
//! with `s = (-1)^{v_1 + ... + v_{i-1}}` for fermions and `s = 1` for bosons.
//! The float backend holds the orthonormal-basis matrices, whose entries
//! carry square roots.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::basis::{AlgebraSpec, FockBasis, Kind, OccupationVector};
use crate::error::{Error, Result};
use crate::scalar::{factorial, Exact, Scalar};
use crate::sparse::SparseMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    Unnormalized,
    Orthonormal,
}

impl Normalization {
    pub fn name(self) -> &'static str {
        match self {
            Normalization::Unnormalized => "unnormalized",
            Normalization::Orthonormal => "orthonormal",
        }
    }
}

/// Which basis (spec plus normalization) an operator's matrix refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisTag {
    pub spec: AlgebraSpec,
    pub normalization: Normalization,
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} graded-lex {}", self.spec, self.normalization.name())
    }
}

/// A matrix together with the basis it is written in.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator<T> {
    tag: BasisTag,
    matrix: SparseMatrix<T>,
}

pub type ExactOperator = Operator<Exact>;
pub type FloatOperator = Operator<f64>;

impl<T: Scalar> Operator<T> {
    pub fn new(tag: BasisTag, matrix: SparseMatrix<T>) -> Self {
        assert_eq!(
            matrix.dims(),
            (tag.spec.dimension(), tag.spec.dimension()),
            "matrix does not fit the basis of {tag}"
        );
        Self { tag, matrix }
    }

    pub fn tag(&self) -> BasisTag {
        self.tag
    }

    pub fn matrix(&self) -> &SparseMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> SparseMatrix<T> {
        self.matrix
    }

    fn expect_tag(&self, expected: BasisTag) -> Result<()> {
        if self.tag == expected {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                expected: expected.to_string(),
                found: self.tag.to_string(),
            })
        }
    }
}

/// Diagonal Gram form `<v|v>` of the unnormalized basis.
#[derive(Debug, Clone, PartialEq)]
pub struct GramForm {
    spec: AlgebraSpec,
    values: Vec<Exact>,
}

impl GramForm {
    pub fn spec(&self) -> AlgebraSpec {
        self.spec
    }

    pub fn values(&self) -> &[Exact] {
        &self.values
    }

    pub fn get(&self, rank: usize) -> &Exact {
        &self.values[rank]
    }

    fn tag(&self) -> BasisTag {
        BasisTag {
            spec: self.spec,
            normalization: Normalization::Unnormalized,
        }
    }
}

/// `p! * prod(v_i!) / (p^k (p - k)!)`; the product is 1 for fermions.
pub fn norm_squared(p: u32, v: &OccupationVector) -> Exact {
    let k = v.total();
    let occupation_factorials = v
        .entries()
        .iter()
        .fold(BigInt::from(1), |acc, &l| acc * factorial(l));
    let num = factorial(p) * occupation_factorials;
    let den = BigInt::from(p).pow(k) * factorial(p - k);
    Exact::new(num, den)
}

/// Basis plus operator builders for one spec.
#[derive(Debug, Clone)]
pub struct FockSpace {
    basis: FockBasis,
}

impl FockSpace {
    pub fn new(spec: AlgebraSpec) -> Self {
        Self {
            basis: FockBasis::new(spec),
        }
    }

    pub fn spec(&self) -> AlgebraSpec {
        self.basis.spec()
    }

    pub fn basis(&self) -> &FockBasis {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.dimension()
    }

    pub fn tag(&self, normalization: Normalization) -> BasisTag {
        BasisTag {
            spec: self.spec(),
            normalization,
        }
    }

    fn sign(&self, v: &OccupationVector, i: usize) -> i64 {
        match self.spec().kind() {
            Kind::Fermi if v.prefix_total(i) % 2 == 1 => -1,
            _ => 1,
        }
    }

    /// Builds a ladder matrix from a per-column coefficient rule.
    fn ladder<T: Scalar>(
        &self,
        i: usize,
        delta: i32,
        normalization: Normalization,
        coefficient: impl Fn(&OccupationVector) -> T,
    ) -> Result<Operator<T>> {
        let spec = self.spec();
        spec.check_mode(i)?;
        let dim = self.dimension();
        let mut m = SparseMatrix::zeros(dim, dim);
        for (col, v) in self.basis.states().iter().enumerate() {
            if delta > 0 && v.total() == spec.p() {
                continue;
            }
            let Some(target) = v.shifted(i, delta) else {
                continue;
            };
            let row = self.basis.rank(&target)?;
            let value = coefficient(v) * T::from_i64(self.sign(v, i));
            m.add_to(row, col, value);
        }
        Ok(Operator::new(self.tag(normalization), m))
    }

    /// Exact `a_i^+` (0-based mode `i`) in the unnormalized basis.
    pub fn creation(&self, i: usize) -> Result<ExactOperator> {
        self.ladder(i, 1, Normalization::Unnormalized, |_| Exact::one())
    }

    /// Exact `a_i^-` (0-based mode `i`) in the unnormalized basis.
    pub fn annihilation(&self, i: usize) -> Result<ExactOperator> {
        let p = self.spec().p() as i64;
        self.ladder(i, -1, Normalization::Unnormalized, |v| {
            let k = v.total() as i64;
            Exact::from_i64(v.entries()[i] as i64) * Exact::ratio(p - k + 1, p)
        })
    }

    /// Diagonal total number operator; identical in both normalizations.
    pub fn number<T: Scalar>(&self, normalization: Normalization) -> Operator<T> {
        let diag = self
            .basis
            .states()
            .iter()
            .map(|v| T::from_i64(v.total() as i64));
        Operator::new(self.tag(normalization), SparseMatrix::from_diagonal(diag))
    }

    pub fn gram(&self) -> GramForm {
        let p = self.spec().p();
        GramForm {
            spec: self.spec(),
            values: self.basis.states().iter().map(|v| norm_squared(p, v)).collect(),
        }
    }

    /// Orthonormal-basis `a_i^+` straight from the closed-form actions:
    /// `sqrt((p - k)/p)` for fermions, `sqrt((l_i + 1)(p - k)/p)` for bosons.
    pub fn normalized_creation(&self, i: usize) -> Result<FloatOperator> {
        let p = self.spec().p() as f64;
        self.ladder(i, 1, Normalization::Orthonormal, |v| {
            let k = v.total() as f64;
            let occ = v.entries()[i] as f64;
            match v.kind() {
                Kind::Fermi => ((p - k) / p).sqrt(),
                Kind::Bose => ((occ + 1.0) * (p - k) / p).sqrt(),
            }
        })
    }

    /// Orthonormal-basis `a_i^-`: `sqrt(v_i (p - k + 1)/p)`.
    pub fn normalized_annihilation(&self, i: usize) -> Result<FloatOperator> {
        let p = self.spec().p() as f64;
        self.ladder(i, -1, Normalization::Orthonormal, |v| {
            let k = v.total() as f64;
            (v.entries()[i] as f64 * (p - k + 1.0) / p).sqrt()
        })
    }

    /// Ordinary fermion/boson creation matrix elements on the same basis
    /// labels (`1` or `sqrt(l_i + 1)`), ignoring the cap.
    pub fn standard_creation(&self, i: usize) -> Result<FloatOperator> {
        self.ladder(i, 1, Normalization::Orthonormal, |v| match v.kind() {
            Kind::Fermi => 1.0,
            Kind::Bose => (v.entries()[i] as f64 + 1.0).sqrt(),
        })
    }

    /// Ordinary annihilation matrix elements (`1` or `sqrt(l_i)`).
    pub fn standard_annihilation(&self, i: usize) -> Result<FloatOperator> {
        self.ladder(i, -1, Normalization::Orthonormal, |v| {
            (v.entries()[i] as f64).sqrt()
        })
    }
}

/// Changes an exact unnormalized-basis operator to the orthonormal basis:
/// `A'(r, c) = A(r, c) * sqrt(g_r / g_c)`.
pub fn normalize(op: &ExactOperator, gram: &GramForm) -> Result<FloatOperator> {
    op.expect_tag(gram.tag())?;
    let matrix = op.matrix().map(|r, c, v| {
        let ratio = gram.get(r) / gram.get(c);
        v.to_f64() * ratio.to_f64().sqrt()
    });
    Ok(Operator::new(
        BasisTag {
            spec: gram.spec,
            normalization: Normalization::Orthonormal,
        },
        matrix,
    ))
}

/// Adjoint with respect to the Gram inner product: `G^{-1} A^T G`.
pub fn adjoint_wrt_gram(op: &ExactOperator, gram: &GramForm) -> Result<ExactOperator> {
    op.expect_tag(gram.tag())?;
    let matrix = op
        .matrix()
        .transpose()
        .map(|r, c, v| v * gram.get(c) / gram.get(r));
    Ok(Operator::new(op.tag, matrix))
}

/// Creation, annihilation and number matrices of one spec in one backend.
#[derive(Debug, Clone)]
pub struct Generators<T> {
    pub spec: AlgebraSpec,
    pub creation: Vec<SparseMatrix<T>>,
    pub annihilation: Vec<SparseMatrix<T>>,
    pub number: SparseMatrix<T>,
}

impl Generators<Exact> {
    pub fn exact(space: &FockSpace) -> Self {
        let n = space.spec().n();
        Self {
            spec: space.spec(),
            creation: (0..n)
                .map(|i| space.creation(i).expect("mode in range").into_matrix())
                .collect(),
            annihilation: (0..n)
                .map(|i| space.annihilation(i).expect("mode in range").into_matrix())
                .collect(),
            number: space.number(Normalization::Unnormalized).into_matrix(),
        }
    }
}

impl Generators<f64> {
    /// Orthonormal-basis generators from the closed-form actions.
    pub fn normalized(space: &FockSpace) -> Self {
        let n = space.spec().n();
        Self {
            spec: space.spec(),
            creation: (0..n)
                .map(|i| space.normalized_creation(i).expect("mode in range").into_matrix())
                .collect(),
            annihilation: (0..n)
                .map(|i| {
                    space
                        .normalized_annihilation(i)
                        .expect("mode in range")
                        .into_matrix()
                })
                .collect(),
            number: space.number(Normalization::Orthonormal).into_matrix(),
        }
    }
}

impl<T: Scalar> Generators<T> {
    pub fn dimension(&self) -> usize {
        self.number.nrows()
    }

    pub fn p(&self) -> T {
        T::from_i64(self.spec.p() as i64)
    }

    /// `+1` for commutators (Bose), `-1` for anticommutators (Fermi).
    pub fn exchange_sign(&self) -> i64 {
        match self.spec.kind() {
            Kind::Fermi => -1,
            Kind::Bose => 1,
        }
    }

    pub fn identity(&self) -> SparseMatrix<T> {
        SparseMatrix::identity(self.dimension())
    }

    /// Diagonal matrix `f(N)` for a function of the total occupation.
    pub fn function_of_number(&self, f: impl Fn(&T) -> T) -> SparseMatrix<T> {
        SparseMatrix::from_diagonal(self.number.diagonal().iter().map(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Exact {
        Exact::ratio(n, d)
    }

    fn rank(space: &FockSpace, entries: &[u32]) -> usize {
        let v = OccupationVector::new(space.spec().kind(), entries.to_vec()).unwrap();
        space.basis().rank(&v).unwrap()
    }

    /// Column of `op` at basis vector `entries`, as (row-entries, value) pairs.
    fn column(space: &FockSpace, op: &SparseMatrix<Exact>, entries: &[u32]) -> Vec<(Vec<u32>, Exact)> {
        let c = rank(space, entries);
        op.entries()
            .filter(|&(_, col, _)| col == c)
            .map(|(r, _, v)| (space.basis().state(r).entries().to_vec(), v.clone()))
            .collect()
    }

    #[test]
    fn creation_examples() {
        let s = FockSpace::new(AlgebraSpec::fermi(2, 1).unwrap());
        assert!(column(&s, s.creation(1).unwrap().matrix(), &[1, 0]).is_empty());
        let s = FockSpace::new(AlgebraSpec::fermi(2, 2).unwrap());
        assert_eq!(
            column(&s, s.creation(1).unwrap().matrix(), &[1, 0]),
            vec![(vec![1, 1], q(-1, 1))]
        );
        let s = FockSpace::new(AlgebraSpec::bose(1, 3).unwrap());
        assert_eq!(
            column(&s, s.creation(0).unwrap().matrix(), &[2]),
            vec![(vec![3], q(1, 1))]
        );
        assert_eq!(
            s.creation(1),
            Err(Error::ModeOutOfRange { index: 1, n: 1 })
        );
    }

    #[test]
    fn annihilation_examples() {
        let s = FockSpace::new(AlgebraSpec::fermi(2, 2).unwrap());
        assert_eq!(
            column(&s, s.annihilation(0).unwrap().matrix(), &[1, 1]),
            vec![(vec![0, 1], q(1, 2))]
        );
        let s = FockSpace::new(AlgebraSpec::bose(1, 2).unwrap());
        assert_eq!(
            column(&s, s.annihilation(0).unwrap().matrix(), &[2]),
            vec![(vec![1], q(1, 1))]
        );
        for spec in [AlgebraSpec::fermi(3, 2).unwrap(), AlgebraSpec::bose(2, 3).unwrap()] {
            let s = FockSpace::new(spec);
            for i in 0..spec.n() {
                assert!(column(&s, s.annihilation(i).unwrap().matrix(), &vec![0; spec.n()]).is_empty());
            }
        }
    }

    #[test]
    fn number_examples() {
        let s = FockSpace::new(AlgebraSpec::bose(2, 2).unwrap());
        let n: ExactOperator = s.number(Normalization::Unnormalized);
        assert_eq!(n.matrix().get(0, 0), q(0, 1));
        let r = rank(&s, &[1, 1]);
        assert_eq!(n.matrix().get(r, r), q(2, 1));
        let s = FockSpace::new(AlgebraSpec::fermi(3, 2).unwrap());
        let n: ExactOperator = s.number(Normalization::Unnormalized);
        assert_eq!(n.matrix().trace(), q(9, 1));
    }

    #[test]
    fn gram_examples() {
        let s = FockSpace::new(AlgebraSpec::fermi(2, 2).unwrap());
        let g = s.gram();
        assert_eq!(g.get(0), &q(1, 1));
        assert_eq!(g.get(rank(&s, &[1, 1])), &q(1, 2));
        let s = FockSpace::new(AlgebraSpec::bose(2, 2).unwrap());
        assert_eq!(s.gram().get(rank(&s, &[2, 0])), &q(1, 1));
        assert_eq!(s.gram().get(rank(&s, &[1, 1])), &q(1, 2));
    }

    #[test]
    fn gram_recurrence_per_grade() {
        for p in 1..=6 {
            let s = FockSpace::new(AlgebraSpec::fermi(6, p).unwrap());
            let g = s.gram();
            for k in 0..p {
                let lo = g.get(s.basis().grade_range(k).start);
                let hi = g.get(s.basis().grade_range(k + 1).start);
                assert_eq!(hi / lo, q((p - k) as i64, p as i64));
            }
        }
    }

    #[test]
    fn normalize_examples() {
        let s = FockSpace::new(AlgebraSpec::fermi(1, 2).unwrap());
        let f = normalize(&s.creation(0).unwrap(), &s.gram()).unwrap();
        assert_eq!(f.matrix().get(1, 0), 1.0);
        let s = FockSpace::new(AlgebraSpec::bose(1, 2).unwrap());
        let b = normalize(&s.creation(0).unwrap(), &s.gram()).unwrap();
        assert!((b.matrix().get(2, 1) - 1.0).abs() < 1e-15);
        let n = normalize(&s.number(Normalization::Unnormalized), &s.gram()).unwrap();
        assert_eq!(n, s.number(Normalization::Orthonormal));
    }

    #[test]
    fn tag_mismatch_is_rejected() {
        let a = FockSpace::new(AlgebraSpec::fermi(2, 1).unwrap());
        let b = FockSpace::new(AlgebraSpec::bose(2, 1).unwrap());
        let op = a.creation(0).unwrap();
        assert!(matches!(normalize(&op, &b.gram()), Err(Error::BasisMismatch { .. })));
        assert!(matches!(adjoint_wrt_gram(&op, &b.gram()), Err(Error::BasisMismatch { .. })));
    }

    #[test]
    fn adjoints_on_grid() {
        for kind in [Kind::Fermi, Kind::Bose] {
            for n in 1..=4 {
                for p in 1..=4 {
                    let s = FockSpace::new(AlgebraSpec::new(kind, n, p).unwrap());
                    let g = s.gram();
                    for i in 0..n {
                        let plus = s.creation(i).unwrap();
                        let adj = adjoint_wrt_gram(&plus, &g).unwrap();
                        assert_eq!(adj, s.annihilation(i).unwrap());
                        assert_eq!(adjoint_wrt_gram(&adj, &g).unwrap(), plus);
                    }
                    let num = s.number(Normalization::Unnormalized);
                    assert_eq!(adjoint_wrt_gram(&num, &g).unwrap(), num);
                }
            }
        }
    }

    #[test]
    fn ladders_shift_grade_by_one() {
        for spec in [AlgebraSpec::fermi(4, 3).unwrap(), AlgebraSpec::bose(3, 3).unwrap()] {
            let s = FockSpace::new(spec);
            let b = s.basis();
            for i in 0..spec.n() {
                for (r, c, _) in s.creation(i).unwrap().matrix().entries() {
                    assert_eq!(b.grade_of(r), b.grade_of(c) + 1);
                    assert!(b.grade_of(c) < spec.p());
                }
                for (r, c, _) in s.annihilation(i).unwrap().matrix().entries() {
                    assert_eq!(b.grade_of(r) + 1, b.grade_of(c));
                }
            }
        }
    }

    #[test]
    fn normalized_column_norms_match_closed_form() {
        for spec in [AlgebraSpec::fermi(4, 3).unwrap(), AlgebraSpec::bose(3, 4).unwrap()] {
            let s = FockSpace::new(spec);
            let p = spec.p() as f64;
            for i in 0..spec.n() {
                let f = normalize(&s.creation(i).unwrap(), &s.gram()).unwrap();
                for (c, v) in s.basis().states().iter().enumerate() {
                    let sq: f64 = (0..s.dimension()).map(|r| f.matrix().get(r, c).powi(2)).sum();
                    let k = v.total() as f64;
                    let occ = v.entries()[i] as f64;
                    let expected = match spec.kind() {
                        Kind::Fermi => (1.0 - occ) * (p - k) / p,
                        Kind::Bose => (occ + 1.0) * (p - k) / p,
                    };
                    assert!((sq - expected).abs() < 1e-12);
                }
            }
        }
    }
}
