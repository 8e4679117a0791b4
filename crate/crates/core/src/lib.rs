//! Finite Fock representations of generalized fermions and bosons whose
//! total occupation is capped at `p`.
//!
//! The creation operators keep their ordinary (anti)commutation among
//! themselves; only the mixed relation is deformed,
//!
//! ```text
//! (1 - (N-1)/p) a_i^- a_j^+ ± (1 - N/p) a_j^+ a_i^- = (1 - N/p)(1 - (N-1)/p) δ_ij
//! ```
//!
//! (`+` for fermions, `-` for bosons). This crate builds the matrices of
//! `a_i^±`, `N` and the bilinears `e_ij` on the occupation basis with exact
//! rational entries, checks every relation and the gl(1|n) / gl(1+n)
//! structure as matrix identities, and computes characters, grand-canonical
//! sums and Hamiltonian spectra.
//!
//! ```
//! use fockcap::{AlgebraSpec, FockSpace, Generators, relations};
//!
//! let spec = AlgebraSpec::bose(2, 3).unwrap();
//! assert_eq!(spec.dimension(), 10);
//! let g = Generators::exact(&FockSpace::new(spec));
//! assert!(relations::mixed_residual(&g, 0, 0).is_zero());
//! ```

pub mod basis;
pub mod error;
pub mod export;
pub mod lie;
pub mod linalg;
pub mod model;
pub mod operators;
pub mod par;
pub mod relations;
pub mod scalar;
pub mod sparse;
pub mod thermo;

pub use basis::{enumerate_basis, AlgebraSpec, FockBasis, Kind, OccupationVector};
pub use error::{Error, Result};
pub use operators::{
    adjoint_wrt_gram, normalize, ExactOperator, FloatOperator, FockSpace, Generators, GramForm,
    Normalization, Operator,
};
pub use par::Execution;
pub use relations::{Backend, RelationReport};
pub use scalar::{Exact, Scalar};
pub use sparse::SparseMatrix;
