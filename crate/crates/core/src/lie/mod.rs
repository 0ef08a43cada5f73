//! Lie algebras presented by their Maurer–Cartan equations, and the
//! Chevalley–Eilenberg differential on `Λ*(𝔤*)`.
//!
//! The algebra is given by the value of `d` on each generator of `𝔤*`. The
//! bracket follows from `dξ(X, Y) = −ξ([X, Y])`, i.e.
//! `dξ^k = −Σ_{i<j} c_{ij}^k ξ^i ∧ ξ^j` with `[X_i, X_j] = Σ_k c_{ij}^k X_k`.

pub(crate) mod poly;

use num_traits::Zero;
use thiserror::Error;

use crate::exterior::{basis, operator_matrix, ExteriorError, Form, MultiIndex, MAX_DIM};
use crate::linalg::Subspace;
use crate::{DenseMatrix, Rational};

pub use poly::{characteristic_polynomial, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("dimension {0} is not a positive even number")]
    OddDimension(usize),
    #[error("dimension {0} exceeds the supported maximum")]
    TooLarge(usize),
    #[error("expected {expected} generator differentials, found {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("d of generator {generator} is not a 2-form")]
    NotTwoForm { generator: usize },
    #[error("Jacobi identity fails: d(d(e{})) = {residual}", generator + 1)]
    Jacobi { generator: usize, residual: Form },
    #[error("degree {degree} out of range 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

/// Outcome of checking `d∘d = 0` on the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JacobiVerdict {
    Pass,
    Fail { generator: usize, residual: Form },
}

impl JacobiVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, JacobiVerdict::Pass)
    }
}

/// `c[i][j][k]` with `[X_i, X_j] = Σ_k c[i][j][k] X_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    c: Vec<Rational>,
}

impl StructureConstants {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `[u, v]` for coordinate vectors in the basis `X_1 … X_2n`.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let uv = ui * vj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        *o += &uv * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_{X_i}`: column `j` holds `[X_i, X_j]`.
    pub fn ad(&self, i: usize) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m[(k, j)] = self.get(i, j, k).clone();
            }
        }
        m
    }
}

/// Per-generator outcome of the complete-solvability heuristic.
///
/// Only `ad_{X_i}` for basis vectors is examined, which is necessary but not
/// sufficient for every `ad_X` to have real spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteSolvability {
    pub real_spectrum: Vec<bool>,
}

impl CompleteSolvability {
    pub fn passed(&self) -> bool {
        self.real_spectrum.iter().all(|&b| b)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.real_spectrum.iter().position(|&b| !b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    d_gen: Vec<Form>,
}

impl LieAlgebra {
    pub fn new(names: Vec<String>, d_on_generators: Vec<Form>) -> Result<Self, LieError> {
        let dim = names.len();
        if dim == 0 || dim % 2 == 1 {
            return Err(LieError::OddDimension(dim));
        }
        if dim > MAX_DIM {
            return Err(LieError::TooLarge(dim));
        }
        if d_on_generators.len() != dim {
            return Err(LieError::GeneratorCount {
                expected: dim,
                found: d_on_generators.len(),
            });
        }
        for (i, f) in d_on_generators.iter().enumerate() {
            if f.ambient_dim() != dim {
                return Err(ExteriorError::AmbientMismatch {
                    left: dim,
                    right: f.ambient_dim(),
                }
                .into());
            }
            if f.degree() != 2 {
                return Err(LieError::NotTwoForm { generator: i });
            }
        }
        Ok(LieAlgebra {
            names,
            d_gen: d_on_generators,
        })
    }

    pub fn default_names(dim: usize) -> Vec<String> {
        (1..=dim).map(|i| format!("e{i}")).collect()
    }

    pub fn with_default_names(d_on_generators: Vec<Form>) -> Result<Self, LieError> {
        Self::new(Self::default_names(d_on_generators.len()), d_on_generators)
    }

    pub fn abelian(dim: usize) -> Result<Self, LieError> {
        Self::with_default_names((0..dim).map(|_| Form::zero(dim, 2)).collect())
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Half the dimension.
    pub fn n(&self) -> usize {
        self.dim() / 2
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn d_on_generators(&self) -> &[Form] {
        &self.d_gen
    }

    pub fn is_abelian(&self) -> bool {
        self.d_gen.iter().all(Form::is_zero)
    }

    /// Chevalley–Eilenberg differential, extended from the generators as a
    /// graded derivation.
    pub fn differential(&self, a: &Form) -> Result<Form, LieError> {
        if a.ambient_dim() != self.dim() {
            return Err(ExteriorError::AmbientMismatch {
                left: self.dim(),
                right: a.ambient_dim(),
            }
            .into());
        }
        Ok(self.d_unchecked(a))
    }

    pub(crate) fn d_unchecked(&self, a: &Form) -> Form {
        let dim = self.dim();
        let mut out = Form::zero(dim, a.degree() + 1);
        for (m, c) in a.terms() {
            for (pos, i) in m.indices().enumerate() {
                // e_{before} ∧ d e_i ∧ e_{after}, sign (−1)^pos
                let before = MultiIndex::from_bits(m.bits() & ((1u32 << i) - 1));
                let after = MultiIndex::from_bits(m.bits() & !((2u32 << i) - 1));
                let left = Form::monomial(dim, before, c.clone());
                let right = Form::monomial(dim, after, num_traits::One::one());
                let mut t = left.wedge(&self.d_gen[i]).wedge(&right);
                if pos % 2 == 1 {
                    t = t.neg();
                }
                out = out.add(&t);
            }
        }
        out
    }

    pub fn validate_jacobi(&self) -> JacobiVerdict {
        for (i, di) in self.d_gen.iter().enumerate() {
            let dd = self.d_unchecked(di);
            if !dd.is_zero() {
                return JacobiVerdict::Fail {
                    generator: i,
                    residual: dd,
                };
            }
        }
        JacobiVerdict::Pass
    }

    pub fn ensure_jacobi(&self) -> Result<(), LieError> {
        match self.validate_jacobi() {
            JacobiVerdict::Pass => Ok(()),
            JacobiVerdict::Fail {
                generator,
                residual,
            } => Err(LieError::Jacobi {
                generator,
                residual,
            }),
        }
    }

    /// Matrix of `d: Λ^k → Λ^{k+1}` in the canonical bases.
    pub fn matrix_of_d(&self, k: usize) -> Result<DenseMatrix, LieError> {
        if k > self.dim() {
            return Err(LieError::DegreeOutOfRange {
                degree: k,
                top: self.dim(),
            });
        }
        Ok(operator_matrix(self.dim(), k, k + 1, |f| self.d_unchecked(f)))
    }

    pub fn structure_constants(&self) -> StructureConstants {
        let dim = self.dim();
        let mut c = vec![Rational::zero(); dim * dim * dim];
        for (k, dk) in self.d_gen.iter().enumerate() {
            for (m, coeff) in dk.terms() {
                let mut idx = m.indices();
                let (i, j) = (idx.next().unwrap(), idx.next().unwrap());
                c[(i * dim + j) * dim + k] = -coeff.clone();
                c[(j * dim + i) * dim + k] = coeff.clone();
            }
        }
        StructureConstants { dim, c }
    }

    fn bracket_span(&self, sc: &StructureConstants, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for u in a.basis_vectors() {
            for v in b.basis_vectors() {
                vs.push(sc.bracket(u, v));
            }
        }
        Subspace::spanned_by(self.dim(), vs).expect("bracket vectors")
    }

    fn series(&self, lower_central: bool) -> Result<Vec<usize>, LieError> {
        self.ensure_jacobi()?;
        let sc = self.structure_constants();
        let full = Subspace::full(self.dim());
        let mut current = full.clone();
        let mut dims = vec![current.dim()];
        loop {
            let next = if lower_central {
                self.bracket_span(&sc, &full, &current)
            } else {
                self.bracket_span(&sc, &current, &current)
            };
            if next.dim() == current.dim() {
                break;
            }
            dims.push(next.dim());
            if next.is_zero() {
                break;
            }
            current = next;
        }
        Ok(dims)
    }

    /// Dimensions of `𝔤 ⊇ [𝔤,𝔤] ⊇ [𝔤,[𝔤,𝔤]] ⊇ …` until it stabilises.
    pub fn lower_central_series(&self) -> Result<Vec<usize>, LieError> {
        self.series(true)
    }

    /// Dimensions of `𝔤 ⊇ [𝔤,𝔤] ⊇ [[𝔤,𝔤],[𝔤,𝔤]] ⊇ …` until it stabilises.
    pub fn derived_series(&self) -> Result<Vec<usize>, LieError> {
        self.series(false)
    }

    pub fn is_nilpotent(&self) -> Result<bool, LieError> {
        Ok(self.lower_central_series()?.last() == Some(&0))
    }

    pub fn is_solvable(&self) -> Result<bool, LieError> {
        Ok(self.derived_series()?.last() == Some(&0))
    }

    /// `tr(ad_{X_i}) = 0` for every basis vector.
    pub fn is_unimodular(&self) -> bool {
        let sc = self.structure_constants();
        (0..self.dim()).all(|i| sc.ad(i).trace().is_zero())
    }

    pub fn completely_solvable_heuristic(&self) -> CompleteSolvability {
        let sc = self.structure_constants();
        let real_spectrum = (0..self.dim())
            .map(|i| characteristic_polynomial(&sc.ad(i)).all_roots_real())
            .collect();
        CompleteSolvability { real_spectrum }
    }

    /// Dimensions of the exterior powers `Λ^k`, k = 0..=2n.
    pub fn exterior_dims(&self) -> Vec<usize> {
        (0..=self.dim()).map(|k| basis(self.dim(), k).len()).collect()
    }
}
