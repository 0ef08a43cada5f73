//! Exact symplectic Hodge theory on finite-dimensional Lie algebras.
//!
//! Everything is computed over the rationals: the Chevalley–Eilenberg
//! complex of a Lie algebra, the symplectic operators built from a
//! non-degenerate closed 2-form, de Rham, harmonic and δ-cohomologies, and
//! the Lefschetz, dδ-lemma and `i`-levels that compare them.

pub mod cohomology;
pub mod dsl;
pub mod exterior;
pub mod lie;
pub mod linalg;
pub mod random;
pub mod report;
pub mod search;
pub mod suite;
pub mod symplectic;

/// Exact rational scalars.
pub type Rational = num_rational::BigRational;

pub use cohomology::{Cohomology, CohomologyError, LevelReport};
pub use dsl::{AlgebraDocument, ParseError};
pub use exterior::{Form, MultiIndex, Multivector};
pub use lie::{LieAlgebra, LieError};
pub use linalg::{DenseMatrix, Quotient, Subspace};
pub use report::{analyze, AnalysisReport, AnalyzeOptions};
pub use symplectic::{SymplecticError, SymplecticStructure};

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
