//! Dense univariate polynomials over the rationals, just enough for
//! characteristic polynomials and Sturm root counting.

use num_traits::{One, Signed, Zero};

use crate::{DenseMatrix, Rational};

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
                .collect(),
        )
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut r = self.0.clone();
        let dl = divisor.lead().unwrap();
        let dd = divisor.degree();
        if r.len() <= dd {
            return (Poly::new(vec![]), Poly::new(r));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / dl;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.0.iter().enumerate() {
                r[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    fn monic(&self) -> Poly {
        match self.lead() {
            Some(l) => {
                let l = l.clone();
                Poly::new(self.0.iter().map(|c| c / &l).collect())
            }
            None => self.clone(),
        }
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The squarefree part `p / gcd(p, p')`.
    pub fn squarefree(&self) -> Poly {
        if self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    fn sign_at_infinity(&self, negative: bool) -> i32 {
        match self.lead() {
            None => 0,
            Some(l) => {
                let s = if l.is_positive() { 1 } else { -1 };
                if negative && self.degree() % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        }
    }

    /// Number of distinct real roots, by Sturm's theorem.
    pub fn count_real_roots(&self) -> usize {
        let p0 = self.squarefree();
        if p0.degree() == 0 {
            return 0;
        }
        let mut chain = vec![p0.clone(), p0.derivative()];
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(Poly::new(r.0.into_iter().map(|c| -c).collect()));
        }
        let variations = |negative: bool| {
            let signs: Vec<i32> = chain
                .iter()
                .map(|p| p.sign_at_infinity(negative))
                .filter(|&s| s != 0)
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        variations(true) - variations(false)
    }

    /// True when every complex root is real.
    pub fn all_roots_real(&self) -> bool {
        let sf = self.squarefree();
        self.count_real_roots() == sf.degree()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

/// Characteristic polynomial `det(t·I − m)` by the Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial(m: &DenseMatrix) -> Poly {
    let n = m.rows();
    assert_eq!(n, m.cols(), "characteristic polynomial of a non-square matrix");
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut acc = DenseMatrix::zeros(n, n);
    for k in 1..=n {
        let shifted = acc.add(&DenseMatrix::scalar(n, &coeffs[n - k + 1])).unwrap();
        acc = m.mul(&shifted).unwrap();
        coeffs[n - k] = -acc.trace() / Rational::from_integer((k as i64).into());
    }
    Poly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(xs: &[i64]) -> Poly {
        Poly::new(xs.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    #[test]
    fn sturm_counts() {
        // (t-1)(t+1)t
        assert_eq!(p(&[0, -1, 0, 1]).count_real_roots(), 3);
        // t^2 + 1
        assert_eq!(p(&[1, 0, 1]).count_real_roots(), 0);
        assert!(!p(&[1, 0, 1]).all_roots_real());
        // t^2 (t-2)^3 has repeated roots
        let q = p(&[0, 0, 1]);
        let r = p(&[-8, 12, -6, 1]);
        let prod = Poly::new(
            (0..=q.degree() + r.degree())
                .map(|k| {
                    (0..=k)
                        .filter(|&i| i <= q.degree() && k - i <= r.degree())
                        .fold(Rational::zero(), |acc, i| acc + &q.0[i] * &r.0[k - i])
                })
                .collect(),
        );
        assert_eq!(prod.count_real_roots(), 2);
        assert!(prod.all_roots_real());
    }

    #[test]
    fn charpoly_of_rotation() {
        let m = DenseMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert_eq!(characteristic_polynomial(&m), p(&[1, 0, 1]));
    }

    #[test]
    fn charpoly_of_diagonal() {
        let m = DenseMatrix::from_i64(&[&[2, 0, 0], &[0, -1, 0], &[0, 0, 0]]);
        let cp = characteristic_polynomial(&m);
        for root in [2, -1, 0] {
            assert!(cp.eval(&Rational::from_integer(root.into())).is_zero());
        }
        assert!(cp.all_roots_real());
    }
}
