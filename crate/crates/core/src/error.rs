use thiserror::Error;

use crate::hermitian::MatrixClassTag;

pub type Result<T> = std::result::Result<T, OctoError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OctoError {
    /// `|α|` is below the classification tolerance, so the two roots of the
    /// `r` quadratic coincide and cannot label the families.
    #[error("degenerate family structure: |alpha| = {alpha_norm:e} is below tolerance (matrix is {class:?}; use the quaternionic or complex path)")]
    DegenerateFamily { alpha_norm: f64, class: MatrixClassTag },

    #[error("cubic has complex roots (normalized discriminant argument {argument:e}); r is inconsistent with the matrix")]
    ComplexRoots { argument: f64 },

    #[error("eigenvector extraction failed for lambda = {lambda} in family {family}: filtered eigenspace has real dimension {found}, expected {expected} (smallest singular values {singular_values:?})")]
    ExtractionFailure {
        lambda: f64,
        family: u8,
        found: usize,
        expected: usize,
        singular_values: Vec<f64>,
    },

    #[error("matrix is {0:?}, not quaternionic")]
    NotQuaternionic(MatrixClassTag),

    #[error("matrix is {0:?}: the quaternionic subalgebra containing its entries is not unique")]
    AmbiguousSubalgebra(MatrixClassTag),

    #[error("basis change is singular: det = {0:e}")]
    SingularChange(f64),

    #[error("vector is not in the K-eigenspace of the projecting vector (residual {residual:e})")]
    FamilyMismatch { residual: f64 },

    #[error("outer product uu† is complex; family membership is undefined")]
    ComplexProjector,

    #[error("vector has zero norm")]
    ZeroVector,
}
