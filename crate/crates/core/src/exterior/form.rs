use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_traits::{One, Signed, Zero};

use super::index::{basis, binomial, MultiIndex, MAX_DIM};
use super::ExteriorError;
use crate::Rational;

/// Marker for elements of `Λ*(𝔤*)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dual {}

/// Marker for elements of `Λ*(𝔤)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Primal {}

/// A homogeneous element of an exterior algebra over a space of dimension
/// `ambient`, stored sparsely (no zero coefficients).
///
/// Degrees above `ambient` are allowed only for the zero element, which is
/// what a wedge product overflowing the top degree produces.
pub struct Element<S> {
    ambient: usize,
    degree: usize,
    terms: BTreeMap<MultiIndex, Rational>,
    _side: PhantomData<S>,
}

/// A k-form on 𝔤, an element of `Λ^k(𝔤*)`.
pub type Form = Element<Dual>;

/// A k-vector, an element of `Λ^k(𝔤)`.
pub type Multivector = Element<Primal>;

impl<S> Clone for Element<S> {
    fn clone(&self) -> Self {
        Element {
            ambient: self.ambient,
            degree: self.degree,
            terms: self.terms.clone(),
            _side: PhantomData,
        }
    }
}

impl<S> PartialEq for Element<S> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.degree == other.degree && self.terms == other.terms
    }
}

impl<S> Eq for Element<S> {}

impl<S> std::hash::Hash for Element<S> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.degree.hash(state);
        self.terms.hash(state);
    }
}

impl<S> Element<S> {
    pub fn zero(ambient: usize, degree: usize) -> Self {
        assert!(ambient <= MAX_DIM, "ambient dimension {ambient} exceeds {MAX_DIM}");
        Element {
            ambient,
            degree,
            terms: BTreeMap::new(),
            _side: PhantomData,
        }
    }

    pub fn one(ambient: usize) -> Self {
        Self::monomial(ambient, MultiIndex::EMPTY, Rational::one())
    }

    pub fn monomial(ambient: usize, m: MultiIndex, coeff: Rational) -> Self {
        let mut e = Self::zero(ambient, m.degree());
        debug_assert!(m.bits() >> ambient == 0, "monomial outside ambient");
        if !coeff.is_zero() {
            e.terms.insert(m, coeff);
        }
        e
    }

    /// `e_{i1} ∧ … ∧ e_{ik}` for 0-based indices in any order, with the sign
    /// of the sorting permutation; zero on repeated indices.
    pub fn basis_wedge(ambient: usize, indices: &[usize]) -> Self {
        let mut acc = Self::one(ambient);
        for &i in indices {
            acc = acc.wedge(&Self::monomial(ambient, MultiIndex::single(i), Rational::one()));
        }
        acc
    }

    /// Builds an element from (monomial, coefficient) pairs; all monomials
    /// must have the given degree.
    pub fn from_terms<I>(ambient: usize, degree: usize, terms: I) -> Result<Self, ExteriorError>
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut e = Self::zero(ambient, degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(ExteriorError::DegreeMismatch {
                    expected: degree,
                    found: m.degree(),
                });
            }
            if m.bits() >> ambient != 0 {
                return Err(ExteriorError::IndexOutOfRange {
                    ambient,
                    bits: m.bits(),
                });
            }
            e.add_term(m, c);
        }
        Ok(e)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (MultiIndex, &Rational)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, m: MultiIndex) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: MultiIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), ExteriorError> {
        if self.ambient != other.ambient {
            return Err(ExteriorError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExteriorError> {
        self.check_compatible(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(ExteriorError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        let src = if self.is_zero() { self } else { other };
        for (m, c) in &src.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    /// Sum of two elements of the same ambient space and degree.
    ///
    /// Panics on mismatch; use [`Element::try_add`] for a checked version.
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("incompatible exterior elements")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.ambient, self.degree);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, x)| (*m, x * c)).collect();
        out
    }

    pub fn try_wedge(&self, other: &Self) -> Result<Self, ExteriorError> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.ambient, self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((negative, m)) = a.wedge(*b) {
                    let c = ca * cb;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Exterior product; panics on ambient mismatch (see [`Element::try_wedge`]).
    pub fn wedge(&self, other: &Self) -> Self {
        self.try_wedge(other).expect("ambient dimension mismatch")
    }

    pub fn pow(&self, p: usize) -> Self {
        let mut acc = Self::one(self.ambient);
        for _ in 0..p {
            acc = acc.wedge(self);
        }
        acc
    }

    /// Coordinates with respect to `basis(ambient, degree)`.
    pub fn to_coordinates(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); binomial(self.ambient, self.degree)];
        for (m, c) in &self.terms {
            v[m.rank()] = c.clone();
        }
        v
    }

    pub fn from_coordinates(
        ambient: usize,
        degree: usize,
        coords: &[Rational],
    ) -> Result<Self, ExteriorError> {
        let b = basis(ambient, degree);
        if b.len() != coords.len() {
            return Err(ExteriorError::LengthMismatch {
                expected: b.len(),
                found: coords.len(),
            });
        }
        let mut e = Self::zero(ambient, degree);
        for (m, c) in b.into_iter().zip(coords) {
            e.add_term(m, c.clone());
        }
        Ok(e)
    }

    /// Renders the element with the given generator names, e.g. `2 a^b - 1/2 c^d`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        Named { e: self, names }
    }

    fn fmt_named(&self, f: &mut fmt::Formatter<'_>, name: &dyn Fn(usize) -> String) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let word: Vec<String> = m.indices().map(name).collect();
            if word.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", word.join("^"))?;
            } else {
                write!(f, "{mag} {}", word.join("^"))?;
            }
        }
        Ok(())
    }
}

struct Named<'a, S> {
    e: &'a Element<S>,
    names: &'a [String],
}

impl<S> fmt::Display for Named<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.e.fmt_named(f, &|i| {
            self.names
                .get(i)
                .cloned()
                .unwrap_or_else(|| format!("e{}", i + 1))
        })
    }
}

impl<S> fmt::Display for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_named(f, &|i| format!("e{}", i + 1))
    }
}

impl<S> fmt::Debug for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] {}", self.degree, self)
    }
}

impl Form {
    /// Contraction `ι_{X_i}` by the i-th basis vector (0-based), an
    /// antiderivation of degree −1.
    pub fn contract_vector(&self, i: usize) -> Form {
        let mut out = Form::zero(self.ambient, self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            if m.contains(i) {
                let c = if m.count_below(i) % 2 == 1 { -c.clone() } else { c.clone() };
                out.add_term(m.without(i), c);
            }
        }
        out
    }

    /// Contraction by a multivector. A decomposable `v1 ∧ … ∧ vp` acts as
    /// `ι_{vp} ∘ … ∘ ι_{v1}`, so that `ι_{X∧Y}(ξ∧η) = det[ξ(X) ξ(Y); η(X) η(Y)]`.
    pub fn contract_multi(&self, p: &Multivector) -> Result<Form, ExteriorError> {
        self.contract_multi_with(p, ContractionOrder::Evaluation)
    }

    #[doc(hidden)]
    pub fn contract_multi_with(
        &self,
        p: &Multivector,
        order: ContractionOrder,
    ) -> Result<Form, ExteriorError> {
        if self.ambient != p.ambient {
            return Err(ExteriorError::AmbientMismatch {
                left: self.ambient,
                right: p.ambient,
            });
        }
        let mut out = Form::zero(self.ambient, self.degree.saturating_sub(p.degree));
        if p.degree > self.degree {
            return Ok(out);
        }
        for (pm, pc) in &p.terms {
            let mut acc = self.clone();
            let idx: Vec<usize> = pm.indices().collect();
            match order {
                ContractionOrder::Evaluation => {
                    for &i in &idx {
                        acc = acc.contract_vector(i);
                    }
                }
                ContractionOrder::Composition => {
                    for &i in idx.iter().rev() {
                        acc = acc.contract_vector(i);
                    }
                }
            }
            for (m, c) in acc.terms {
                out.add_term(m, c * pc);
            }
        }
        Ok(out)
    }
}

/// Order in which the factors of a decomposable multivector act.
///
/// Only [`ContractionOrder::Evaluation`] is consistent with `*∘* = Id`; the
/// other order is kept as a negative control for the invariant suite.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ContractionOrder {
    /// `ι_{v1∧…∧vp} = ι_{vp} ∘ … ∘ ι_{v1}`.
    #[default]
    Evaluation,
    /// `ι_{v1∧…∧vp} = ι_{v1} ∘ … ∘ ι_{vp}`.
    Composition,
}
