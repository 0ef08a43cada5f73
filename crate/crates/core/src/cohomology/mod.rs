//! Cohomologies of a symplectic Lie algebra and the maps between them.
//!
//! Every space lives in the coordinates of some `Λ^k(𝔤*)`; cohomology
//! classes are written in the coordinates of the canonical complement of the
//! coboundaries inside the cocycles (see [`Quotient`]).

mod expr;
mod levels;

use std::sync::OnceLock;

use rayon::prelude::*;
use thiserror::Error;

use crate::linalg::LinalgError;
use crate::symplectic::{Operator, SymplecticStructure};
use crate::{DenseMatrix, Form, Quotient, Rational, Subspace};

pub use expr::{Atom, AtomKind, Comparison, ExprError, SpaceExpr, SpaceValue, Statement};
pub use levels::{DecompositionVerdict, Gate, LevelReport, Witness, WitnessKind};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("degree {degree} out of range 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("L^{p} does not preserve exact forms in degree {degree}")]
    NotWellDefined { degree: usize, p: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `H^k = cocycles / coboundaries`, for either the full complex or the
/// subcomplex of coclosed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologySpace {
    pub degree: usize,
    quotient: Quotient,
}

impl CohomologySpace {
    pub fn cocycles(&self) -> &Subspace {
        self.quotient.big()
    }

    pub fn coboundaries(&self) -> &Subspace {
        self.quotient.small()
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }
}

/// Harmonic forms `ker d ∩ ker δ` and the classes they represent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicSpace {
    pub degree: usize,
    pub harmonic_forms: Subspace,
    /// `harmonic_forms ∩ Im d`
    pub exact_harmonic: Subspace,
    pub dim_hr: usize,
}

/// The induced map `i: H^k_δ → H^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapI {
    pub degree: usize,
    /// Columns are images of the `H^k_δ` basis in `H^k` coordinates.
    pub matrix: DenseMatrix,
    pub injective: bool,
    pub surjective: bool,
    /// Representatives of a basis of `ker i`.
    pub kernel_witnesses: Vec<Form>,
}

impl MapI {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

#[derive(Debug)]
struct DegreeData {
    ker_d: Subspace,
    im_d: Subspace,
    ker_delta: Subspace,
    im_delta: Subspace,
    im_ddelta: Subspace,
    harmonic: Subspace,
    h: Quotient,
    h_delta: Quotient,
}

/// Lazily evaluated cohomological data of a symplectic structure.
#[derive(Debug)]
pub struct Cohomology {
    s: SymplecticStructure,
    degrees: Vec<OnceLock<DegreeData>>,
}

impl Clone for Cohomology {
    fn clone(&self) -> Self {
        Cohomology::new(self.s.clone())
    }
}

impl Cohomology {
    pub fn new(s: SymplecticStructure) -> Self {
        let degrees = (0..=s.dim()).map(|_| OnceLock::new()).collect();
        Cohomology { s, degrees }
    }

    pub fn structure(&self) -> &SymplecticStructure {
        &self.s
    }

    pub fn dim(&self) -> usize {
        self.s.dim()
    }

    pub fn n(&self) -> usize {
        self.s.n()
    }

    /// Computes every degree, in parallel.
    pub fn precompute(&self) {
        (0..=self.dim()).into_par_iter().for_each(|k| {
            self.data(k);
        });
    }

    fn check_degree(&self, k: usize) -> Result<(), CohomologyError> {
        if k > self.dim() {
            return Err(CohomologyError::DegreeOutOfRange {
                degree: k,
                top: self.dim(),
            });
        }
        Ok(())
    }

    fn data(&self, k: usize) -> &DegreeData {
        self.degrees[k].get_or_init(|| self.compute(k))
    }

    fn compute(&self, k: usize) -> DegreeData {
        let s = &self.s;
        let ker_d = s.matrix(Operator::D, k).kernel();
        let ambient = ker_d.ambient_dim();
        let im_d = if k == 0 {
            Subspace::zero(ambient)
        } else {
            s.matrix(Operator::D, k - 1).image()
        };
        let ker_delta = s.matrix(Operator::Delta, k).kernel();
        let im_delta = if k == self.dim() {
            Subspace::zero(ambient)
        } else {
            s.matrix(Operator::Delta, k + 1).image()
        };
        let im_ddelta = if k == 0 {
            Subspace::zero(ambient)
        } else {
            s.matrix(Operator::D, k - 1)
                .mul(s.matrix(Operator::Delta, k))
                .expect("composable")
                .image()
        };
        let harmonic = ker_d.intersect(&ker_delta).expect("same ambient");
        let b_delta = if k == 0 {
            Subspace::zero(ambient)
        } else {
            s.matrix(Operator::Delta, k - 1)
                .kernel()
                .map(s.matrix(Operator::D, k - 1))
                .expect("composable")
        };
        let h = Quotient::new(ker_d.clone(), im_d.clone()).expect("d∘d = 0");
        let h_delta = Quotient::new(harmonic.clone(), b_delta).expect("δd = −dδ");
        DegreeData {
            ker_d,
            im_d,
            ker_delta,
            im_delta,
            im_ddelta,
            harmonic,
            h,
            h_delta,
        }
    }

    pub fn ker_d(&self, k: usize) -> Result<&Subspace, CohomologyError> {
        self.check_degree(k)?;
        Ok(&self.data(k).ker_d)
    }

    pub fn im_d(&self, k: usize) -> Result<&Subspace, CohomologyError> {
        self.check_degree(k)?;
        Ok(&self.data(k).im_d)
    }

    pub fn ker_delta(&self, k: usize) -> Result<&Subspace, CohomologyError> {
        self.check_degree(k)?;
        Ok(&self.data(k).ker_delta)
    }

    /// `δ(Λ^{k+1})`.
    pub fn im_delta(&self, k: usize) -> Result<&Subspace, CohomologyError> {
        self.check_degree(k)?;
        Ok(&self.data(k).im_delta)
    }

    /// `dδ(Λ^k)`.
    pub fn im_ddelta(&self, k: usize) -> Result<&Subspace, CohomologyError> {
        self.check_degree(k)?;
        Ok(&self.data(k).im_ddelta)
    }

    pub fn cohomology(&self, k: usize) -> Result<CohomologySpace, CohomologyError> {
        self.check_degree(k)?;
        Ok(CohomologySpace {
            degree: k,
            quotient: self.data(k).h.clone(),
        })
    }

    pub fn betti(&self, k: usize) -> Result<usize, CohomologyError> {
        self.check_degree(k)?;
        Ok(self.data(k).h.dim())
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..=self.dim()).map(|k| self.data(k).h.dim()).collect()
    }

    pub fn harmonic(&self, k: usize) -> Result<HarmonicSpace, CohomologyError> {
        self.check_degree(k)?;
        let data = self.data(k);
        let exact_harmonic = data.harmonic.intersect(&data.im_d)?;
        Ok(HarmonicSpace {
            degree: k,
            dim_hr: data.harmonic.dim() - exact_harmonic.dim(),
            harmonic_forms: data.harmonic.clone(),
            exact_harmonic,
        })
    }

    pub fn harmonic_dims(&self) -> Vec<usize> {
        (0..=self.dim())
            .map(|k| self.harmonic(k).expect("in range").dim_hr)
            .collect()
    }

    /// `H^k_hr` as a subspace of `H^k` coordinates.
    pub fn harmonic_classes(&self, k: usize) -> Result<Subspace, CohomologyError> {
        self.check_degree(k)?;
        let data = self.data(k);
        Ok(data.h.classes_of(&data.harmonic)?)
    }

    /// Cohomology of the subcomplex of coclosed forms.
    pub fn h_delta(&self, k: usize) -> Result<CohomologySpace, CohomologyError> {
        self.check_degree(k)?;
        Ok(CohomologySpace {
            degree: k,
            quotient: self.data(k).h_delta.clone(),
        })
    }

    pub fn h_delta_dims(&self) -> Vec<usize> {
        (0..=self.dim()).map(|k| self.data(k).h_delta.dim()).collect()
    }

    /// The class of a closed form in `H^k` coordinates.
    pub fn class_of(&self, form: &Form) -> Result<Vec<Rational>, CohomologyError> {
        let k = form.degree();
        self.check_degree(k)?;
        Ok(self.data(k).h.coords(&form.to_coordinates())?)
    }

    /// Representative of a class given in `H^k` coordinates.
    pub fn representative(&self, k: usize, coords: &[Rational]) -> Result<Form, CohomologyError> {
        self.check_degree(k)?;
        let v = self.data(k).h.lift(coords)?;
        Ok(Form::from_coordinates(self.dim(), k, &v).expect("length matches"))
    }

    /// The induced map `L^p: H^k → H^{k+2p}` in cohomology coordinates.
    pub fn lefschetz_map(&self, k: usize, p: usize) -> Result<DenseMatrix, CohomologyError> {
        self.check_degree(k)?;
        let target = k + 2 * p;
        let src = &self.data(k).h;
        if target > self.dim() {
            return Ok(DenseMatrix::zeros(0, src.dim()));
        }
        let lp = self.s.lefschetz_matrix(k, p);
        let dst = &self.data(target).h;
        if !dst.small().contains_subspace(&src.small().map(&lp)?)? {
            return Err(CohomologyError::NotWellDefined { degree: k, p });
        }
        let columns: Vec<Vec<Rational>> = src
            .complement()
            .basis_vectors()
            .map(|v| dst.coords(&lp.mul_vec(v).expect("shape")))
            .collect::<Result<_, _>>()?;
        Ok(DenseMatrix::from_columns(dst.dim(), &columns)?)
    }

    /// Primitive classes `P_k = ker(L^{n−k+1}: H^k → H^{2n−k+2})`, in `H^k`
    /// coordinates.
    pub fn primitive_cohomology(&self, k: usize) -> Result<Subspace, CohomologyError> {
        let n = self.n();
        if k > n {
            return Err(CohomologyError::DegreeOutOfRange { degree: k, top: n });
        }
        Ok(self.lefschetz_map(k, n - k + 1)?.kernel())
    }

    /// Whether `L^{n−k}: H^k → H^{2n−k}` is onto.
    pub fn lefschetz_surjective(&self, k: usize) -> Result<bool, CohomologyError> {
        let n = self.n();
        let m = self.lefschetz_map(k, n - k)?;
        Ok(m.rank() == m.rows())
    }

    pub fn map_i(&self, k: usize) -> Result<MapI, CohomologyError> {
        self.check_degree(k)?;
        let data = self.data(k);
        let columns: Vec<Vec<Rational>> = data
            .h_delta
            .complement()
            .basis_vectors()
            .map(|v| data.h.coords(v))
            .collect::<Result<_, _>>()?;
        let matrix = DenseMatrix::from_columns(data.h.dim(), &columns)?;
        let rank = matrix.rank();
        let exact_harmonic = data.harmonic.intersect(&data.im_d)?;
        let kernel = Quotient::new(exact_harmonic, data.h_delta.small().clone())?;
        let kernel_witnesses = kernel
            .complement()
            .basis_vectors()
            .map(|v| Form::from_coordinates(self.dim(), k, v).expect("length matches"))
            .collect();
        Ok(MapI {
            degree: k,
            injective: rank == data.h_delta.dim(),
            surjective: rank == data.h.dim(),
            matrix,
            kernel_witnesses,
        })
    }

    /// Whether `i₁: H^k_δ → H^k_hr` is onto, i.e. the image of `i` has the
    /// dimension of the harmonic cohomology.
    pub fn i1_surjective(&self, k: usize) -> Result<bool, CohomologyError> {
        Ok(self.map_i(k)?.matrix.rank() == self.harmonic(k)?.dim_hr)
    }
}
