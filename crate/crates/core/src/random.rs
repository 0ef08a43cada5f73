//! Seeded random Lie algebras with symplectic forms.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exterior::{basis, Form};
use crate::lie::LieAlgebra;
use crate::{rat, Rational};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `d e_j ∈ Λ²⟨e_1, …, e_{j−1}⟩`.
    #[default]
    Nilpotent,
    /// `e_1` acts diagonally with weights in `{−1, 0, 1}` summing to zero,
    /// over a weight-compatible nilpotent part.
    AlmostNilpotent,
}

/// The generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial))
}

fn small_coefficient<R: Rng>(rng: &mut R) -> Rational {
    let v: i64 = rng.gen_range(1..=2);
    rat(if rng.gen_bool(0.5) { v } else { -v })
}

/// A random nilpotent algebra; retries until the Jacobi identity holds.
pub fn random_nilpotent<R: Rng>(dim: usize, rng: &mut R) -> LieAlgebra {
    loop {
        let density: f64 = rng.gen_range(0.0..0.5);
        let d: Vec<Form> = (0..dim)
            .map(|j| {
                let mut f = Form::zero(dim, 2);
                for m in basis(j, 2) {
                    if rng.gen_bool(density) {
                        f = f.add(&Form::monomial(dim, m, small_coefficient(rng)));
                    }
                }
                f
            })
            .collect();
        let g = LieAlgebra::with_default_names(d).expect("valid shape");
        if g.validate_jacobi().passed() {
            return g;
        }
    }
}

/// A random unimodular solvable algebra of the almost-nilpotent kind.
pub fn random_almost_nilpotent<R: Rng>(dim: usize, rng: &mut R) -> LieAlgebra {
    loop {
        let mut weights = vec![0i64; dim];
        for w in weights.iter_mut().skip(1) {
            *w = rng.gen_range(-1..=1);
        }
        let total: i64 = weights.iter().sum();
        if total != 0 {
            continue;
        }
        let density: f64 = rng.gen_range(0.0..0.6);
        let d: Vec<Form> = (0..dim)
            .map(|k| {
                let mut f = Form::basis_wedge(dim, &[0, k]).scale(&rat(-weights[k]));
                for m in basis(k, 2) {
                    let idx: Vec<usize> = m.indices().collect();
                    if idx[0] == 0 || weights[idx[0]] + weights[idx[1]] != weights[k] {
                        continue;
                    }
                    if rng.gen_bool(density) {
                        f = f.add(&Form::monomial(dim, m, small_coefficient(rng)));
                    }
                }
                f
            })
            .collect();
        let g = LieAlgebra::with_default_names(d).expect("valid shape");
        if g.validate_jacobi().passed() {
            return g;
        }
    }
}

pub fn random_algebra<R: Rng>(family: Family, dim: usize, rng: &mut R) -> LieAlgebra {
    match family {
        Family::Nilpotent => random_nilpotent(dim, rng),
        Family::AlmostNilpotent => random_almost_nilpotent(dim, rng),
    }
}

/// A random closed 2-form with `ω^n ≠ 0`, if one turns up within a bounded
/// number of attempts.
pub fn random_symplectic_form<R: Rng>(g: &LieAlgebra, rng: &mut R) -> Option<Form> {
    let dim = g.dim();
    let closed = g.matrix_of_d(2).ok()?.kernel();
    if closed.is_zero() {
        return None;
    }
    let vectors: Vec<Vec<Rational>> = closed.basis_vectors().map(|v| v.to_vec()).collect();
    for _ in 0..32 {
        let mut coords = vec![rat(0); vectors[0].len()];
        for v in &vectors {
            let c = rat(rng.gen_range(-2..=2));
            for (x, y) in coords.iter_mut().zip(v) {
                *x += &c * y;
            }
        }
        let omega = Form::from_coordinates(dim, 2, &coords).ok()?;
        if !omega.pow(dim / 2).is_zero() {
            return Some(omega);
        }
    }
    None
}

/// A random symplectic instance of the given family; resamples the algebra
/// until it carries a symplectic form.
pub fn random_instance<R: Rng>(family: Family, dim: usize, rng: &mut R) -> (LieAlgebra, Form) {
    loop {
        let g = random_algebra(family, dim, rng);
        if let Some(omega) = random_symplectic_form(&g, rng) {
            return (g, omega);
        }
    }
}
