//! Self-adjoint parts of `M_{n₁}(ℝ) ⊕ ⋯ ⊕ M_{n_k}(ℝ)` as a concrete model
//! of the abstract theory: Jordan products, projections, symmetries,
//! exchange constructions and generalized comparability.
//!
//! Everything is generic over [`Scalar`]. Exact rationals carry the
//! algebraic identities; the constructions in [`float`] need square roots
//! and are available for floating scalars only.

pub mod algebra;
pub mod dense;
pub mod float;
pub mod io;
pub mod ops;
pub mod sample;
pub mod scalar;

pub use algebra::{BlockAlgebra, BlockMatrix, Projection, SaElement, Symmetry, SymmetryWitness};
pub use dense::Matrix;
pub use float::{equivalence_witness, generalized_comparability, single_exchange_symmetry, Comparability};
pub use ops::{
    central_cover_m, chained_exchange, exchange_symmetry_orthogonal, extend_symmetry, jordan_product,
    localize_symmetry, projection_join, projection_meet,
};
pub use scalar::Scalar;
