//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's linear algebra.

#![allow(dead_code)]

use lefschetz_core::exterior::{basis, Form};
use lefschetz_core::Rational;
use num_traits::{One, Zero};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Nonzero rows of the reduced row echelon form of `rows`.
pub fn rref(mut rows: Vec<Vec<Rational>>, width: usize) -> Vec<Vec<Rational>> {
    let mut lead = 0;
    for col in 0..width {
        let Some(p) = (lead..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(lead, p);
        let inv = Rational::one() / rows[lead][col].clone();
        for x in rows[lead].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[lead].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != lead && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        lead += 1;
    }
    rows.truncate(lead);
    rows
}

/// Canonical basis of the span of `vectors` in `Q^width`.
pub fn span(vectors: Vec<Vec<Rational>>, width: usize) -> Vec<Vec<Rational>> {
    rref(vectors, width)
}

/// Canonical basis of the null space of the map whose columns are `columns`
/// (each of length `rows`).
pub fn kernel(columns: &[Vec<Rational>], rows: usize) -> Vec<Vec<Rational>> {
    let width = columns.len();
    let m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let reduced = rref(m, width);
    let pivots: Vec<usize> = reduced
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    let mut out = Vec::new();
    for free in (0..width).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); width];
        v[free] = Rational::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        out.push(v);
    }
    span(out, width)
}

/// Zassenhaus: reduce `[a | a]` over `[b | 0]`; rows with a zero left half
/// span the intersection.
pub fn intersect(a: &[Vec<Rational>], b: &[Vec<Rational>], width: usize) -> Vec<Vec<Rational>> {
    let mut rows = Vec::new();
    for v in a {
        rows.push(v.iter().chain(v.iter()).cloned().collect());
    }
    for v in b {
        rows.push(v.iter().cloned().chain(std::iter::repeat_n(Rational::zero(), width)).collect());
    }
    let reduced = rref(rows, 2 * width);
    let inter = reduced
        .into_iter()
        .filter(|r| r[..width].iter().all(Zero::is_zero))
        .map(|r| r[width..].to_vec())
        .collect();
    span(inter, width)
}

pub fn sum(a: &[Vec<Rational>], b: &[Vec<Rational>], width: usize) -> Vec<Vec<Rational>> {
    span(a.iter().chain(b).cloned().collect(), width)
}

pub fn contains(big: &[Vec<Rational>], small: &[Vec<Rational>], width: usize) -> bool {
    sum(big, small, width).len() == big.len()
}

/// Columns of a form operator on the monomial basis of `Λ^k`, as coordinate
/// vectors read off term by term.
pub fn columns(dim: usize, k: usize, target: usize, f: impl Fn(&Form) -> Form) -> Vec<Vec<Rational>> {
    let out_basis = basis(dim, target);
    basis(dim, k)
        .into_iter()
        .map(|m| {
            let image = f(&Form::monomial(dim, m, q(1)));
            out_basis.iter().map(|&b| image.coefficient(b)).collect()
        })
        .collect()
}

/// Leibniz expansion.
pub fn leibniz_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut total = Rational::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let mut term = q(permutation_sign(p));
        for (r, &c) in p.iter().enumerate() {
            term *= &m[r][c];
        }
        total += term;
    });
    total
}

fn permutations(p: &mut Vec<usize>, start: usize, f: &mut impl FnMut(&[usize])) {
    if start == p.len() {
        f(p);
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        permutations(p, start + 1, f);
        p.swap(start, i);
    }
}

/// Sign by counting inversions.
pub fn permutation_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Rank by fraction-free Bareiss elimination on integer matrices.
pub fn bareiss_rank(m: &[Vec<i64>]) -> usize {
    use num_bigint::BigInt;
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}
