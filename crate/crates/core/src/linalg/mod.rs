//! Exact linear algebra over the rationals: dense matrices, reduced row
//! echelon forms and a calculus of subspaces in canonical form.

mod matrix;
mod subspace;

use thiserror::Error;

pub use matrix::DenseMatrix;
pub use subspace::{Quotient, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("subspace is not contained in the ambient subspace")]
    NotContained,
}

/// Reduced row echelon form of `m`.
pub fn rref(m: &DenseMatrix) -> DenseMatrix {
    m.rref()
}

pub fn kernel(m: &DenseMatrix) -> Subspace {
    m.kernel()
}

pub fn image(m: &DenseMatrix) -> Subspace {
    m.image()
}

pub fn solve(
    m: &DenseMatrix,
    target: &[crate::Rational],
) -> Result<Option<Vec<crate::Rational>>, LinalgError> {
    m.solve(target)
}
