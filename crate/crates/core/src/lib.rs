//! Real eigenvalue theory for 3×3 octonionic Hermitian matrices.
//!
//! The real eigenvalues of such a matrix split into two families of three,
//! each labelled by a root `r` of `r² + 4Φr − |α|² = 0`. Each family yields
//! an orthonormal decomposition of the identity, and an arbitrary vector in
//! 𝕆³ splits into six components, each an eigenvector of the matrix.
//!
//! Module map:
//!
//! * [`octonion`]: octonion arithmetic over a fixed multiplication table.
//! * [`hermitian`]: the [`Hermitian3`] matrix type and its scalar invariants.
//! * [`subspace`]: 𝕋 = ⟨1, a, b, c⟩, the characteristic operator `K` on single
//!   octonions, the projectors `Kₘ` and the quaternionic split.
//! * [`spectral`]: eigenvalues per family, eigenvector extraction, family
//!   membership.
//! * [`projection`]: the six-way decomposition of vectors.
//! * [`verify`]: the randomized identity harness used by the CLI.

pub mod cubic;
pub mod error;
pub mod hermitian;
pub mod linalg;
pub mod octonion;
pub mod projection;
pub mod random;
pub mod spectral;
pub mod subspace;
pub mod vector;
pub mod verify;

pub use error::{OctoError, Result};
pub use hermitian::{Hermitian3, MatrixClass, MatrixClassTag};
pub use octonion::{Octonion, Real8Matrix};
pub use projection::{Part, SixWayDecomposition};
pub use spectral::{EigenPair, EigenSystem, FamilyEigen, SpectralPath};
pub use subspace::{FamilyContext, QuaternionicSplit, TBasis};
pub use vector::OctVector3;
pub use verify::{Check, CheckSet, FuzzClass, FuzzOptions, RunReport, VerifyOptions};

/// Default absolute tolerance for identity checks, before operand scaling.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;
