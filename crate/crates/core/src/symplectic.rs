//! Symplectic structures on Lie algebras and the operators of symplectic
//! Hodge theory: `♮`, the Poisson bivector `G`, the symplectic star, the
//! codifferential `δ`, the `sl(2)` triple `L, ι_G, A`, primitivity, the
//! pairing `Λ^k(G)` and the Lepage decomposition.
//!
//! Contractions by multivectors use [`ContractionOrder::Evaluation`], under
//! which `*∘* = Id` and the star and Koszul codifferentials coincide. With
//! this order one has `[ι_G, L] = −A`, so `ι_G(ω) = −n`.

use std::sync::OnceLock;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exterior::{
    basis, binomial, operator_matrix, ContractionOrder, ExteriorError, Form, MultiIndex,
    Multivector,
};
use crate::lie::{LieAlgebra, LieError};
use crate::{DenseMatrix, Rational, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error("dimension {0} is not even")]
    OddDimension(usize),
    #[error("omega must be a 2-form, got degree {0}")]
    NotTwoForm(usize),
    #[error("omega is not closed: d(omega) = {residual}")]
    NotClosed { residual: Form },
    #[error("omega is degenerate: omega^n = 0")]
    Degenerate,
    #[error("degree {degree} exceeds n = {n}")]
    DegreeAboveMiddle { degree: usize, n: usize },
    #[error("degree {degree} is below n = {n}")]
    DegreeBelowMiddle { degree: usize, n: usize },
    #[error("c_{{{j},{k}}} is undefined for n = {n}")]
    ConstantOutOfRange { n: usize, j: usize, k: usize },
    #[error("degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

/// The per-degree operators that are materialised as matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    /// `d: Λ^k → Λ^{k+1}`
    D,
    /// `δ: Λ^k → Λ^{k−1}` (the zero map on `Λ^0`, with 0 rows)
    Delta,
    /// `L: Λ^k → Λ^{k+2}`
    L,
    /// `ι_G: Λ^k → Λ^{k−2}` (0 rows below degree 2)
    IotaG,
    /// `*: Λ^k → Λ^{2n−k}`
    Star,
}

const OPERATORS: [Operator; 5] = [
    Operator::D,
    Operator::Delta,
    Operator::L,
    Operator::IotaG,
    Operator::Star,
];

#[derive(Debug)]
struct Cache {
    slots: Vec<OnceLock<DenseMatrix>>,
}

impl Cache {
    fn new(dim: usize) -> Self {
        Cache {
            slots: (0..OPERATORS.len() * (dim + 1))
                .map(|_| OnceLock::new())
                .collect(),
        }
    }
}

/// Both characterisations of primitivity for a form of degree `k ≤ n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Primitivity {
    /// `L^{n−k+1}(α) = 0`
    pub by_lefschetz: bool,
    /// `ι_G(α) = 0`
    pub by_contraction: bool,
}

impl Primitivity {
    pub fn is_primitive(&self) -> bool {
        self.by_lefschetz
    }

    pub fn agree(&self) -> bool {
        self.by_lefschetz == self.by_contraction
    }
}

/// `α = Σ_j L^j φ_{i−2j}` (low) or `ψ = Σ_j L^{n−i+j} φ_{i−2j}` (high).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LepageDecomposition {
    /// Degree `i ≤ n` of the top component.
    pub base_degree: usize,
    /// Whether this decomposes a form of degree `2n − i`.
    pub high: bool,
    /// `components[j] = φ_{i−2j}`, each primitive.
    pub components: Vec<Form>,
}

#[derive(Debug)]
pub struct SymplecticStructure {
    algebra: LieAlgebra,
    omega: Form,
    natural_iso: DenseMatrix,
    natural_iso_inv: DenseMatrix,
    g: Multivector,
    volume: Form,
    order: ContractionOrder,
    cache: Cache,
}

impl Clone for SymplecticStructure {
    fn clone(&self) -> Self {
        SymplecticStructure {
            algebra: self.algebra.clone(),
            omega: self.omega.clone(),
            natural_iso: self.natural_iso.clone(),
            natural_iso_inv: self.natural_iso_inv.clone(),
            g: self.g.clone(),
            volume: self.volume.clone(),
            order: self.order,
            cache: Cache::new(self.algebra.dim()),
        }
    }
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, i| acc * Rational::from_integer((i as i64).into()))
}

impl SymplecticStructure {
    pub fn build(algebra: LieAlgebra, omega: Form) -> Result<Self, SymplecticError> {
        Self::build_with_convention(algebra, omega, ContractionOrder::Evaluation)
    }

    #[doc(hidden)]
    pub fn build_with_convention(
        algebra: LieAlgebra,
        omega: Form,
        order: ContractionOrder,
    ) -> Result<Self, SymplecticError> {
        let dim = algebra.dim();
        if dim % 2 == 1 {
            return Err(SymplecticError::OddDimension(dim));
        }
        if omega.ambient_dim() != dim {
            return Err(ExteriorError::AmbientMismatch {
                left: dim,
                right: omega.ambient_dim(),
            }
            .into());
        }
        if omega.degree() != 2 {
            return Err(SymplecticError::NotTwoForm(omega.degree()));
        }
        algebra.ensure_jacobi()?;
        let residual = algebra.differential(&omega)?;
        if !residual.is_zero() {
            return Err(SymplecticError::NotClosed { residual });
        }
        let n = dim / 2;
        let top = omega.pow(n);
        if top.is_zero() {
            return Err(SymplecticError::Degenerate);
        }
        let volume = top.scale(&(Rational::one() / factorial(n)));

        let mut natural_iso = DenseMatrix::zeros(dim, dim);
        for i in 0..dim {
            for (m, c) in omega.contract_vector(i).terms() {
                let j = m.indices().next().unwrap();
                natural_iso[(j, i)] = c.clone();
            }
        }
        let natural_iso_inv = natural_iso
            .inverse()
            .ok_or(SymplecticError::Degenerate)?;

        let mut s = SymplecticStructure {
            algebra,
            omega,
            natural_iso,
            natural_iso_inv,
            g: Multivector::zero(dim, 2),
            volume,
            order,
            cache: Cache::new(dim),
        };
        s.g = s.natural_iso_inverse(&s.omega).neg();
        Ok(s)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn omega(&self) -> &Form {
        &self.omega
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn n(&self) -> usize {
        self.algebra.n()
    }

    /// Matrix of `♮: 𝔤 → 𝔤*`, `♮(X) = ι_X ω`; column `i` holds `♮(X_i)`.
    pub fn natural_iso(&self) -> &DenseMatrix {
        &self.natural_iso
    }

    /// The Poisson bivector `G = −♮⁻¹(ω)`.
    pub fn poisson_bivector(&self) -> &Multivector {
        &self.g
    }

    /// `v_M = ω^n / n!`.
    pub fn volume(&self) -> &Form {
        &self.volume
    }

    /// `♮(X)` for a vector given in the basis `X_1 … X_2n`.
    pub fn natural_iso_vector(&self, x: &Multivector) -> Form {
        assert_eq!(x.degree(), 1, "natural isomorphism takes a vector");
        let coords = self.natural_iso.mul_vec(&x.to_coordinates()).unwrap();
        Form::from_coordinates(self.dim(), 1, &coords).unwrap()
    }

    /// `♮⁻¹` extended to `Λ^k(𝔤*) → Λ^k(𝔤)` as an algebra isomorphism.
    pub fn natural_iso_inverse(&self, a: &Form) -> Multivector {
        let dim = self.dim();
        let images: Vec<Multivector> = (0..dim)
            .map(|j| {
                let col = self.natural_iso_inv.column(j);
                Multivector::from_coordinates(dim, 1, &col).unwrap()
            })
            .collect();
        let mut out = Multivector::zero(dim, a.degree());
        for (m, c) in a.terms() {
            let mut acc = Multivector::one(dim);
            for j in m.indices() {
                acc = acc.wedge(&images[j]);
                if acc.is_zero() {
                    break;
                }
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    fn contract(&self, a: &Form, p: &Multivector) -> Form {
        a.contract_multi_with(p, self.order).expect("same ambient")
    }

    /// `*α = (−1)^k ι_{♮⁻¹α}(v_M)`.
    pub fn star(&self, a: &Form) -> Form {
        let k = a.degree();
        if k > self.dim() {
            return Form::zero(self.dim(), 0);
        }
        let r = self.contract(&self.volume, &self.natural_iso_inverse(a));
        if k % 2 == 1 {
            r.neg()
        } else {
            r
        }
    }

    /// `δα = (−1)^{k+1} * d * α`.
    pub fn delta_star(&self, a: &Form) -> Form {
        let k = a.degree();
        if k == 0 {
            return Form::zero(self.dim(), 0);
        }
        let r = self.star(&self.algebra.d_unchecked(&self.star(a)));
        if k.is_multiple_of(2) {
            r.neg()
        } else {
            r
        }
    }

    /// `δ = [ι_G, d] = ι_G d − d ι_G`.
    pub fn delta_koszul(&self, a: &Form) -> Form {
        if a.degree() == 0 {
            return Form::zero(self.dim(), 0);
        }
        let first = self.iota_g(&self.algebra.d_unchecked(a));
        if a.degree() < 2 {
            return first;
        }
        first.sub(&self.algebra.d_unchecked(&self.iota_g(a)))
    }

    /// The codifferential, computed via the star operator.
    pub fn delta(&self, a: &Form) -> Form {
        self.delta_star(a)
    }

    pub fn d(&self, a: &Form) -> Form {
        self.algebra.d_unchecked(a)
    }

    /// `L(α) = ω ∧ α`.
    pub fn op_l(&self, a: &Form) -> Form {
        self.omega.wedge(a)
    }

    /// `L^p(α) = ω^p ∧ α`.
    pub fn op_l_pow(&self, a: &Form, p: usize) -> Form {
        self.omega.pow(p).wedge(a)
    }

    /// Contraction by `G`; zero of degree 0 on forms of degree below 2.
    pub fn iota_g(&self, a: &Form) -> Form {
        if a.degree() < 2 {
            return Form::zero(self.dim(), 0);
        }
        self.contract(a, &self.g)
    }

    /// `A = (n − k)·Id` on `Λ^k`.
    pub fn op_a(&self, a: &Form) -> Form {
        let c = self.n() as i64 - a.degree() as i64;
        a.scale(&Rational::from_integer(c.into()))
    }

    fn compute_matrix(&self, op: Operator, k: usize) -> DenseMatrix {
        let dim = self.dim();
        let cols = binomial(dim, k);
        match op {
            Operator::D => operator_matrix(dim, k, k + 1, |f| self.d(f)),
            Operator::Delta if k == 0 => DenseMatrix::zeros(0, cols),
            Operator::Delta => operator_matrix(dim, k, k - 1, |f| self.delta(f)),
            Operator::L => operator_matrix(dim, k, k + 2, |f| self.op_l(f)),
            Operator::IotaG if k < 2 => DenseMatrix::zeros(0, cols),
            Operator::IotaG => operator_matrix(dim, k, k - 2, |f| self.iota_g(f)),
            Operator::Star => operator_matrix(dim, k, dim - k, |f| self.star(f)),
        }
    }

    /// Cached matrix of `op` on `Λ^k` in the canonical bases.
    pub fn matrix(&self, op: Operator, k: usize) -> &DenseMatrix {
        assert!(k <= self.dim(), "degree {k} out of range");
        let slot = OPERATORS.iter().position(|&o| o == op).unwrap() * (self.dim() + 1) + k;
        self.cache.slots[slot].get_or_init(|| self.compute_matrix(op, k))
    }

    /// Matrix of `L^p: Λ^k → Λ^{k+2p}`.
    pub fn lefschetz_matrix(&self, k: usize, p: usize) -> DenseMatrix {
        let wp = self.omega.pow(p);
        operator_matrix(self.dim(), k, k + 2 * p, |f| wp.wedge(f))
    }

    pub fn primitivity(&self, a: &Form) -> Result<Primitivity, SymplecticError> {
        let (n, k) = (self.n(), a.degree());
        if k > n {
            return Err(SymplecticError::DegreeAboveMiddle { degree: k, n });
        }
        Ok(Primitivity {
            by_lefschetz: self.op_l_pow(a, n - k + 1).is_zero(),
            by_contraction: self.iota_g(a).is_zero(),
        })
    }

    pub fn is_primitive(&self, a: &Form) -> Result<bool, SymplecticError> {
        Ok(self.primitivity(a)?.is_primitive())
    }

    /// Primitive forms of degree `k ≤ n`: the kernel of `L^{n−k+1}`.
    pub fn primitive_subspace(&self, k: usize) -> Result<Subspace, SymplecticError> {
        let n = self.n();
        if k > n {
            return Err(SymplecticError::DegreeAboveMiddle { degree: k, n });
        }
        Ok(self.lefschetz_matrix(k, n - k + 1).kernel())
    }

    /// `Λ^k(G)(β, α) = Σ β_I α_J det[G(ξ^{i_s}, ξ^{j_t})]`.
    pub fn pairing(&self, b: &Form, a: &Form) -> Result<Rational, SymplecticError> {
        if a.degree() != b.degree() {
            return Err(SymplecticError::DegreeMismatch(b.degree(), a.degree()));
        }
        let g_at = |x: usize, y: usize| -> Rational {
            match x.cmp(&y) {
                std::cmp::Ordering::Less => self.g.coefficient(MultiIndex::from_indices(&[x, y]).unwrap()),
                std::cmp::Ordering::Greater => -self.g.coefficient(MultiIndex::from_indices(&[y, x]).unwrap()),
                std::cmp::Ordering::Equal => Rational::zero(),
            }
        };
        let k = a.degree();
        let mut total = Rational::zero();
        for (bi, bc) in b.terms() {
            let rows: Vec<usize> = bi.indices().collect();
            for (aj, ac) in a.terms() {
                let cols: Vec<usize> = aj.indices().collect();
                let mut m = DenseMatrix::zeros(k, k);
                for (s, &x) in rows.iter().enumerate() {
                    for (t, &y) in cols.iter().enumerate() {
                        m[(s, t)] = g_at(x, y);
                    }
                }
                let det = m.determinant().unwrap();
                if !det.is_zero() {
                    total += bc * ac * det;
                }
            }
        }
        Ok(total)
    }

    /// Lepage decomposition of a form of degree `i ≤ n`.
    pub fn lepage_decompose(&self, a: &Form) -> Result<LepageDecomposition, SymplecticError> {
        let (n, i) = (self.n(), a.degree());
        if i > n {
            return Err(SymplecticError::DegreeAboveMiddle { degree: i, n });
        }
        let mut blocks: Vec<(usize, Vec<Vec<Rational>>)> = Vec::new();
        let mut columns = Vec::new();
        for j in 0..=i / 2 {
            let m = i - 2 * j;
            let prim = self.primitive_subspace(m)?;
            let lj = self.lefschetz_matrix(m, j);
            let vecs: Vec<Vec<Rational>> = prim.basis_vectors().map(|v| v.to_vec()).collect();
            for v in &vecs {
                columns.push(lj.mul_vec(v).unwrap());
            }
            blocks.push((m, vecs));
        }
        let rows = binomial(self.dim(), i);
        let system = DenseMatrix::from_columns(rows, &columns).unwrap();
        let coeffs = system
            .solve(&a.to_coordinates())
            .unwrap()
            .expect("Lepage decomposition spans Λ^i");
        let mut offset = 0;
        let mut components = Vec::new();
        for (m, vecs) in blocks {
            let mut coords = vec![Rational::zero(); binomial(self.dim(), m)];
            for v in &vecs {
                let c = &coeffs[offset];
                offset += 1;
                for (x, y) in coords.iter_mut().zip(v) {
                    *x += c * y;
                }
            }
            components.push(Form::from_coordinates(self.dim(), m, &coords)?);
        }
        Ok(LepageDecomposition {
            base_degree: i,
            high: false,
            components,
        })
    }

    /// Lepage decomposition of a form of degree `2n − i ≥ n`, by first
    /// writing it as `L^{n−i}(φ)` and decomposing `φ`.
    pub fn lepage_decompose_high(&self, psi: &Form) -> Result<LepageDecomposition, SymplecticError> {
        let (n, k) = (self.n(), psi.degree());
        if k < n || k > 2 * n {
            return Err(SymplecticError::DegreeBelowMiddle { degree: k, n });
        }
        let i = 2 * n - k;
        let phi_coords = self
            .lefschetz_matrix(i, n - i)
            .solve(&psi.to_coordinates())
            .unwrap()
            .expect("L^{n-i} is onto in the middle range");
        let phi = Form::from_coordinates(self.dim(), i, &phi_coords)?;
        let mut dec = self.lepage_decompose(&phi)?;
        dec.high = true;
        Ok(dec)
    }

    /// Reassembles the decomposed form.
    pub fn lepage_reconstruct(&self, dec: &LepageDecomposition) -> Form {
        let (n, i) = (self.n(), dec.base_degree);
        let shift = if dec.high { n - i } else { 0 };
        let degree = if dec.high { 2 * n - i } else { i };
        dec.components
            .iter()
            .enumerate()
            .fold(Form::zero(self.dim(), degree), |acc, (j, phi)| {
                acc.add(&self.op_l_pow(phi, shift + j))
            })
    }

    /// For a nonzero primitive `α` of degree `k`, the scalar `c` with
    /// `*α = c·L^{n−k}(α)`, if `*α` is proportional to `L^{n−k}(α)`.
    pub fn star_proportionality(&self, a: &Form) -> Option<Rational> {
        let k = a.degree();
        if k > self.n() || a.is_zero() {
            return None;
        }
        let s = self.star(a);
        let l = self.op_l_pow(a, self.n() - k);
        let (m, lc) = l.terms().next()?;
        let c = s.coefficient(m) / lc;
        (l.scale(&c) == s).then_some(c)
    }

    /// Basis of `Λ^k` as forms.
    pub fn basis_forms(&self, k: usize) -> Vec<Form> {
        basis(self.dim(), k)
            .into_iter()
            .map(|m| Form::monomial(self.dim(), m, Rational::one()))
            .collect()
    }
}

/// `c_{j,k} = ∏_{i<j} (i+1)(n−k−i)`, defined for `k ≤ n` and `j ≤ n−k`.
pub fn c_constant(n: usize, j: usize, k: usize) -> Result<Rational, SymplecticError> {
    if k > n || j > n - k {
        return Err(SymplecticError::ConstantOutOfRange { n, j, k });
    }
    Ok((0..j).fold(Rational::one(), |acc, i| {
        acc * Rational::from_integer((((i + 1) * (n - k - i)) as i64).into())
    }))
}
