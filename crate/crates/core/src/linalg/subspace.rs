use num_traits::Zero;

use super::{DenseMatrix, LinalgError};
use crate::Rational;

/// A linear subspace of `Q^ambient`, held by its canonical basis: the nonzero
/// rows of a reduced row echelon form. Equal subspaces have identical bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: DenseMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: DenseMatrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: DenseMatrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    pub fn from_rows_of(m: &DenseMatrix) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis: DenseMatrix::from_rows(m.cols(), rows).expect("rref rows"),
            pivots,
        }
    }

    pub fn spanned_by<I>(ambient: usize, vectors: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let m = DenseMatrix::from_rows(ambient, vectors.into_iter().collect())?;
        Ok(Self::from_rows_of(&m))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &DenseMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: usize) -> Result<(), LinalgError> {
        if self.ambient != other {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: other,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other.ambient)?;
        Ok(Self::from_rows_of(&self.basis.vstack(&other.basis)?))
    }

    /// Intersection, via the null space of `[Aᵀ | -Bᵀ]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other.ambient)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let (da, db) = (self.dim(), other.dim());
        let mut stacked = DenseMatrix::zeros(self.ambient, da + db);
        for i in 0..self.ambient {
            for j in 0..da {
                stacked[(i, j)] = self.basis[(j, i)].clone();
            }
            for j in 0..db {
                stacked[(i, da + j)] = -other.basis[(j, i)].clone();
            }
        }
        let null = stacked.kernel();
        let vectors = null.basis_vectors().map(|coeffs| {
            let mut v = vec![Rational::zero(); self.ambient];
            for (j, c) in coeffs[..da].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (x, b) in v.iter_mut().zip(self.basis.row(j)) {
                    *x += c * b;
                }
            }
            v
        });
        Subspace::spanned_by(self.ambient, vectors.collect::<Vec<_>>())
    }

    /// Reduces `v` modulo this subspace: the unique representative of
    /// `v + self` vanishing on every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        self.check_ambient(v.len())?;
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, b) in out.iter_mut().zip(self.basis.row(row)) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other.ambient)?;
        for v in other.basis_vectors() {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `dim(self / small)`; fails unless `small ⊆ self`.
    pub fn quotient_dim(&self, small: &Subspace) -> Result<usize, LinalgError> {
        if !self.contains_subspace(small)? {
            return Err(LinalgError::NotContained);
        }
        Ok(self.dim() - small.dim())
    }

    /// Image of this subspace under a linear map.
    pub fn map(&self, m: &DenseMatrix) -> Result<Subspace, LinalgError> {
        self.check_ambient(m.cols())?;
        let images = self
            .basis_vectors()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>, _>>()?;
        Subspace::spanned_by(m.rows(), images)
    }

    /// Preimage `{v : m·v ∈ self}`.
    pub fn preimage(&self, m: &DenseMatrix) -> Result<Subspace, LinalgError> {
        self.check_ambient(m.rows())?;
        // v ↦ m·v mod self
        let cols = (0..m.cols())
            .map(|j| self.reduce(&m.column(j)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DenseMatrix::from_columns(m.rows(), &cols)?.kernel())
    }
}

/// A quotient `big / small` with a canonical complement: the RREF of the
/// reductions of `big` modulo `small`. Coordinates of a class are read off at
/// the complement's pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    big: Subspace,
    small: Subspace,
    complement: Subspace,
}

impl Quotient {
    pub fn new(big: Subspace, small: Subspace) -> Result<Self, LinalgError> {
        if !big.contains_subspace(&small)? {
            return Err(LinalgError::NotContained);
        }
        let reduced = big
            .basis_vectors()
            .map(|v| small.reduce(v))
            .collect::<Result<Vec<_>, _>>()?;
        let complement = Subspace::spanned_by(big.ambient_dim(), reduced)?;
        Ok(Quotient {
            big,
            small,
            complement,
        })
    }

    pub fn dim(&self) -> usize {
        self.complement.dim()
    }

    pub fn big(&self) -> &Subspace {
        &self.big
    }

    pub fn small(&self) -> &Subspace {
        &self.small
    }

    /// Canonical representatives of a basis of the quotient.
    pub fn complement(&self) -> &Subspace {
        &self.complement
    }

    /// Coordinates of the class of `v`; `v` must lie in `big`.
    pub fn coords(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if !self.big.contains(v)? {
            return Err(LinalgError::NotContained);
        }
        let r = self.small.reduce(v)?;
        Ok(self.complement.pivots().iter().map(|&p| r[p].clone()).collect())
    }

    /// The canonical representative with the given coordinates.
    pub fn lift(&self, coords: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if coords.len() != self.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim(),
                found: coords.len(),
            });
        }
        let mut v = vec![Rational::zero(); self.big.ambient_dim()];
        for (c, row) in coords.iter().zip(self.complement.basis_vectors()) {
            if c.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(row) {
                *x += c * b;
            }
        }
        Ok(v)
    }

    /// Classes of the vectors of `sub ⊆ big`, as a subspace of quotient coordinates.
    pub fn classes_of(&self, sub: &Subspace) -> Result<Subspace, LinalgError> {
        let coords = sub
            .basis_vectors()
            .map(|v| self.coords(v))
            .collect::<Result<Vec<_>, _>>()?;
        Subspace::spanned_by(self.dim(), coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn self_intersection_and_zero_sum() {
        let a = Subspace::spanned_by(3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.sum(&Subspace::zero(3)).unwrap(), a);
    }

    #[test]
    fn complementary_planes_meet_in_zero() {
        let a = Subspace::spanned_by(4, vec![v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])]).unwrap();
        let b = Subspace::spanned_by(4, vec![v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])]).unwrap();
        assert!(a.intersect(&b).unwrap().is_zero());
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(4));
    }

    #[test]
    fn transverse_lines_span_plane() {
        let a = Subspace::spanned_by(2, vec![v(&[1, 1])]).unwrap();
        let b = Subspace::spanned_by(2, vec![v(&[1, -1])]).unwrap();
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(2));
    }

    #[test]
    fn zero_vector_is_contained() {
        assert!(Subspace::zero(3).contains(&v(&[0, 0, 0])).unwrap());
        assert!(Subspace::zero(3).contains(&v(&[0, 0])).is_err());
    }

    #[test]
    fn quotient_dim_requires_inclusion() {
        let a = Subspace::spanned_by(3, vec![v(&[1, 0, 0])]).unwrap();
        let b = Subspace::spanned_by(3, vec![v(&[0, 1, 0])]).unwrap();
        assert_eq!(a.quotient_dim(&a).unwrap(), 0);
        assert_eq!(a.quotient_dim(&b), Err(LinalgError::NotContained));
        assert!(a.intersect(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn quotient_coordinates_round_trip() {
        let big = Subspace::full(3);
        let small = Subspace::spanned_by(3, vec![v(&[1, 1, 0])]).unwrap();
        let q = Quotient::new(big, small).unwrap();
        assert_eq!(q.dim(), 2);
        let x = v(&[3, 5, 7]);
        let c = q.coords(&x).unwrap();
        let back = q.lift(&c).unwrap();
        // same class
        let diff: Vec<_> = x.iter().zip(&back).map(|(a, b)| a - b).collect();
        assert!(q.small().contains(&diff).unwrap());
    }

    #[test]
    fn preimage_of_zero_is_kernel() {
        let m = DenseMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(Subspace::zero(2).preimage(&m).unwrap(), m.kernel());
    }
}
