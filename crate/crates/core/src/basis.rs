//! Occupation-number basis of the capped Fock spaces.
//!
//! Basis vectors are ordered by total occupation (the grade), and
//! lexicographically within each grade. The number operator is therefore
//! block diagonal with contiguous blocks, one per grade `0..=p`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exchange statistics of the operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Fermi,
    Bose,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Fermi => "fermi",
            Kind::Bose => "bose",
        }
    }

    /// Largest occupation a single mode may carry under cap `p`.
    fn mode_max(self, p: u32) -> u32 {
        match self {
            Kind::Fermi => 1,
            Kind::Bose => p,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The triple (kind, n, p) fixing an algebra and its Fock space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraSpec {
    kind: Kind,
    n: usize,
    p: u32,
}

impl AlgebraSpec {
    pub fn new(kind: Kind, n: usize, p: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoModes);
        }
        if p == 0 {
            return Err(Error::ZeroCap);
        }
        Ok(Self { kind, n, p })
    }

    pub fn fermi(n: usize, p: u32) -> Result<Self> {
        Self::new(Kind::Fermi, n, p)
    }

    pub fn bose(n: usize, p: u32) -> Result<Self> {
        Self::new(Kind::Bose, n, p)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Fermi specs with `p >= n` span the whole `2^n` space; the deformation
    /// is still well defined but the cap never binds.
    pub fn cap_is_trivial(&self) -> bool {
        self.kind == Kind::Fermi && self.p as usize >= self.n
    }

    pub fn check_mode(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::ModeOutOfRange { index: i, n: self.n })
        }
    }

    /// Number of basis vectors, from the closed-form binomial sum.
    pub fn dimension(&self) -> usize {
        self.graded_dimensions().iter().sum()
    }

    /// `d_k` for `k = 0..=p`: `C(n,k)` for Fermi, `C(n+k-1,k)` for Bose.
    pub fn graded_dimensions(&self) -> Vec<usize> {
        (0..=self.p).map(|k| self.count(self.n, k) as usize).collect()
    }

    /// Vectors of length `len` with admissible entries summing to `total`.
    fn count(&self, len: usize, total: u32) -> u64 {
        match self.kind {
            Kind::Fermi => binomial(len as u64, total as u64),
            Kind::Bose if len == 0 => u64::from(total == 0),
            Kind::Bose => binomial(total as u64 + len as u64 - 1, total as u64),
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}, p={})", self.kind, self.n, self.p)
    }
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, t| acc * (n - t) / (t + 1))
}

/// Per-mode occupation numbers of one basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OccupationVector {
    kind: Kind,
    entries: Vec<u32>,
}

impl OccupationVector {
    pub fn new(kind: Kind, entries: Vec<u32>) -> Result<Self> {
        if kind == Kind::Fermi && entries.iter().any(|&e| e > 1) {
            return Err(Error::Inadmissible {
                entries,
                reason: "fermionic entries must be 0 or 1".into(),
            });
        }
        Ok(Self { kind, entries })
    }

    pub fn vacuum(kind: Kind, n: usize) -> Self {
        Self {
            kind,
            entries: vec![0; n],
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// Occupations of modes strictly before `i`; its parity is the
    /// fermionic sign of operators acting on mode `i`.
    pub fn prefix_total(&self, i: usize) -> u32 {
        self.entries[..i].iter().sum()
    }

    /// Copy with mode `i` shifted by `delta`, or `None` if it would go negative.
    pub fn shifted(&self, i: usize, delta: i32) -> Option<Self> {
        let value = self.entries[i] as i64 + delta as i64;
        if value < 0 || (self.kind == Kind::Fermi && value > 1) {
            return None;
        }
        let mut entries = self.entries.clone();
        entries[i] = value as u32;
        Some(Self {
            kind: self.kind,
            entries,
        })
    }
}

impl fmt::Display for OccupationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, e) in self.entries.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// Enumerated basis of W(p) (Fermi) or V(p) (Bose) in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct FockBasis {
    spec: AlgebraSpec,
    states: Vec<OccupationVector>,
    // offsets[k] is the rank of the first vector of grade k; offsets[p+1] = dim
    offsets: Vec<usize>,
}

impl FockBasis {
    pub fn new(spec: AlgebraSpec) -> Self {
        let mut states = Vec::with_capacity(spec.dimension());
        let mut offsets = Vec::with_capacity(spec.p as usize + 2);
        let mut scratch = vec![0u32; spec.n];
        for grade in 0..=spec.p {
            offsets.push(states.len());
            push_grade(&spec, 0, grade, &mut scratch, &mut states);
        }
        offsets.push(states.len());
        Self {
            spec,
            states,
            offsets,
        }
    }

    pub fn spec(&self) -> AlgebraSpec {
        self.spec
    }

    pub fn dimension(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[OccupationVector] {
        &self.states
    }

    pub fn state(&self, rank: usize) -> &OccupationVector {
        &self.states[rank]
    }

    pub fn vacuum_rank(&self) -> usize {
        0
    }

    /// Ranks belonging to grade `k`.
    pub fn grade_range(&self, k: u32) -> std::ops::Range<usize> {
        let k = k as usize;
        self.offsets[k]..self.offsets[k + 1]
    }

    pub fn grade_of(&self, rank: usize) -> u32 {
        self.states[rank].total()
    }

    /// Block sizes observed in the enumeration.
    pub fn graded_dimensions(&self) -> Vec<usize> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Combinatorial rank of an admissible vector.
    pub fn rank(&self, v: &OccupationVector) -> Result<usize> {
        let spec = &self.spec;
        let inadmissible = |reason: &str| Error::Inadmissible {
            entries: v.entries.clone(),
            reason: reason.into(),
        };
        if v.kind != spec.kind {
            return Err(inadmissible("statistics kind differs from the spec"));
        }
        if v.entries.len() != spec.n {
            return Err(inadmissible("length differs from the number of modes"));
        }
        let total = v.total();
        if total > spec.p {
            return Err(inadmissible("total occupation exceeds the cap"));
        }
        let mut rank = self.offsets[total as usize];
        let mut remaining = total;
        for (j, &entry) in v.entries.iter().enumerate() {
            let tail = spec.n - j - 1;
            for smaller in 0..entry {
                rank += spec.count(tail, remaining - smaller) as usize;
            }
            remaining -= entry;
        }
        Ok(rank)
    }

    /// Inverse of [`FockBasis::rank`], computed combinatorially.
    pub fn unrank(&self, rank: usize) -> Result<OccupationVector> {
        let spec = &self.spec;
        if rank >= self.dimension() {
            return Err(Error::RankOutOfBounds {
                rank,
                dimension: self.dimension(),
            });
        }
        let grade = self.offsets.partition_point(|&o| o <= rank) - 1;
        let mut rest = (rank - self.offsets[grade]) as u64;
        let mut remaining = grade as u32;
        let mut entries = Vec::with_capacity(spec.n);
        for j in 0..spec.n {
            let tail = spec.n - j - 1;
            let mut value = 0;
            loop {
                let block = spec.count(tail, remaining - value);
                if rest < block {
                    break;
                }
                rest -= block;
                value += 1;
            }
            entries.push(value);
            remaining -= value;
        }
        Ok(OccupationVector {
            kind: spec.kind,
            entries,
        })
    }

    /// CSV listing with columns rank, total and one column per mode (1-based).
    pub fn to_csv(&self) -> String {
        let symbol = match self.spec.kind {
            Kind::Fermi => "theta",
            Kind::Bose => "l",
        };
        let mut out = String::from("rank,total");
        for i in 1..=self.spec.n {
            out.push_str(&format!(",{symbol}_{i}"));
        }
        out.push('\n');
        for (rank, v) in self.states.iter().enumerate() {
            out.push_str(&format!("{rank},{}", v.total()));
            for e in &v.entries {
                out.push_str(&format!(",{e}"));
            }
            out.push('\n');
        }
        out
    }
}

fn push_grade(
    spec: &AlgebraSpec,
    pos: usize,
    remaining: u32,
    scratch: &mut [u32],
    out: &mut Vec<OccupationVector>,
) {
    if pos == spec.n - 1 {
        if remaining <= spec.kind.mode_max(spec.p) {
            scratch[pos] = remaining;
            out.push(OccupationVector {
                kind: spec.kind,
                entries: scratch.to_vec(),
            });
        }
        return;
    }
    for value in 0..=remaining.min(spec.kind.mode_max(spec.p)) {
        scratch[pos] = value;
        push_grade(spec, pos + 1, remaining - value, scratch, out);
    }
    scratch[pos] = 0;
}

/// Shorthand for `FockBasis::new(spec).states().to_vec()`.
pub fn enumerate_basis(spec: AlgebraSpec) -> Vec<OccupationVector> {
    FockBasis::new(spec).states
}
