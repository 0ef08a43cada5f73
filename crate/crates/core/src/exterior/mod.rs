//! Exterior algebras `Λ*(𝔤*)` and `Λ*(𝔤)` over a space with a fixed basis.
//!
//! Monomials are written in ascending index order with coefficient `+1`;
//! every other ordering reduces to this normal form by counting
//! transpositions. Within a degree, monomials are ordered by ascending
//! bitmask, which fixes the coordinate systems used by the linear algebra.

mod form;
mod index;

use thiserror::Error;

#[doc(hidden)]
pub use form::ContractionOrder;
pub use form::{Dual, Element, Form, Multivector, Primal};
pub use index::{basis, binomial, MultiIndex, MAX_DIM};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("coordinate vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("monomial {bits:#b} lies outside an ambient space of dimension {ambient}")]
    IndexOutOfRange { ambient: usize, bits: u32 },
    #[error("degree {degree} out of range for ambient dimension {ambient}")]
    DegreeOutOfRange { ambient: usize, degree: usize },
}

/// Checked variant of [`basis`].
pub fn try_basis(ambient: usize, k: usize) -> Result<Vec<MultiIndex>, ExteriorError> {
    if k > ambient || ambient > MAX_DIM {
        return Err(ExteriorError::DegreeOutOfRange { ambient, degree: k });
    }
    Ok(basis(ambient, k))
}

/// Matrix of a linear map `Λ^from → Λ^to` given on basis monomials.
pub fn operator_matrix<F>(ambient: usize, from: usize, to: usize, f: F) -> crate::DenseMatrix
where
    F: Fn(&Form) -> Form,
{
    let domain = basis(ambient, from);
    let rows = if to <= ambient { binomial(ambient, to) } else { 0 };
    let mut m = crate::DenseMatrix::zeros(rows, domain.len());
    for (j, mono) in domain.into_iter().enumerate() {
        let image = f(&Form::monomial(ambient, mono, num_traits::One::one()));
        for (t, c) in image.terms() {
            m[(t.rank(), j)] = c.clone();
        }
    }
    m
}
