//! The three levels (Lefschetz, dδ-lemma, bijectivity of `i`), their
//! witnesses, and the consistency checks relating them.

use serde::{Deserialize, Serialize};

use super::{Cohomology, CohomologyError};
use crate::{Form, Quotient, Subspace};

/// Hypotheses under which the level equalities are asserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gate {
    pub unimodular: bool,
    /// `b_k = b_{2n−k}` for every `k`.
    pub poincare_duality: bool,
}

impl Gate {
    pub fn passed(&self) -> bool {
        self.unimodular && self.poincare_duality
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// A form in `(Im δ ∩ ker d) ∖ Im dδ`.
    CoexactNotDdelta,
    /// A form in `(Im d ∩ ker δ) ∖ Im dδ`.
    ExactNotDdelta,
    /// A representative of a nonzero class in `ker i`.
    KernelOfI,
    /// A closed form whose class is not in the image of `i`.
    CokernelOfI,
}

/// A certificate for the failure of a level one step higher.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub degree: usize,
    pub form: Form,
}

/// The two harmonic decomposition identities at a pair of degrees
/// `n − k` and `n + k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionVerdict {
    pub k: usize,
    /// `H^{n−k}_hr = P_{n−k} + L(H^{n−k−2}_hr)`
    pub primitive_sum: bool,
    /// `H^{n+k}_hr = L^k(H^{n−k}_hr)`
    pub lefschetz_image: bool,
}

impl DecompositionVerdict {
    pub fn holds(&self) -> bool {
        self.primitive_sum && self.lefschetz_image
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelReport {
    pub lefschetz_level: i32,
    pub ddelta_level: i32,
    /// The dδ-level computed from the star-dual identities in high degrees.
    pub ddelta_dual_level: i32,
    pub i_level: i32,
    /// Largest `s` with `H^{2n−k}_hr = H^{2n−k}` for all `k ≤ s`.
    pub harmonic_level: i32,
    /// `H^k_hr = H^k` for `k ≤ s+2` and `H^{2n−k}_hr = H^{2n−k}` for `k ≤ s`,
    /// with `s` the Lefschetz level.
    pub harmonic_ranges_hold: bool,
    /// `i` bijective for `k ≤ s+1`, with `s` the Lefschetz level.
    pub i_low_range_holds: bool,
    /// The primal and dual dδ identities agree degree by degree.
    pub duality_holds: bool,
    pub decomposition: Vec<DecompositionVerdict>,
    pub i1_surjective: bool,
    pub gate: Gate,
    pub witnesses: Vec<Witness>,
    pub consistent: bool,
}

/// Largest `s ∈ {0, …, top}` satisfying `valid`, or −1.
fn largest(top: usize, valid: impl Fn(usize) -> bool) -> i32 {
    (0..=top).rev().find(|&s| valid(s)).map_or(-1, |s| s as i32)
}

impl Cohomology {
    pub fn gate(&self) -> Gate {
        let b = self.betti_numbers();
        Gate {
            unimodular: self.structure().algebra().is_unimodular(),
            poincare_duality: b.iter().eq(b.iter().rev()),
        }
    }

    /// `Im d ∩ ker δ` on `Λ^k`.
    pub fn exact_coclosed(&self, k: usize) -> Result<Subspace, CohomologyError> {
        Ok(self.im_d(k)?.intersect(self.ker_delta(k)?)?)
    }

    /// `Im δ ∩ ker d` on `Λ^k`.
    pub fn coexact_closed(&self, k: usize) -> Result<Subspace, CohomologyError> {
        Ok(self.im_delta(k)?.intersect(self.ker_d(k)?)?)
    }

    /// `Im d ∩ ker δ = Im dδ` on `Λ^k`.
    pub fn exact_identity(&self, k: usize) -> bool {
        self.exact_coclosed(k).expect("in range") == *self.im_ddelta(k).expect("in range")
    }

    /// `Im δ ∩ ker d = Im dδ` on `Λ^k`.
    pub fn coexact_identity(&self, k: usize) -> bool {
        self.coexact_closed(k).expect("in range") == *self.im_ddelta(k).expect("in range")
    }

    fn both_identities(&self, k: usize) -> bool {
        self.exact_identity(k) && self.coexact_identity(k)
    }

    /// Largest `s ≤ n−1` such that `L^{n−k}: H^k → H^{2n−k}` is onto for all
    /// `k ≤ s`; −1 if it already fails at `k = 0`.
    pub fn lefschetz_level(&self) -> i32 {
        let n = self.n();
        let surj: Vec<bool> = (0..n)
            .map(|k| self.lefschetz_surjective(k).expect("in range"))
            .collect();
        largest(n - 1, |s| surj[..=s].iter().all(|&b| b))
    }

    /// Largest `s ≤ n−1` such that all three spaces `Im d ∩ ker δ`, `Im dδ`,
    /// `Im δ ∩ ker d` agree on `Λ^k` for `k ≤ s`, and the first two agree on
    /// `Λ^{s+1}`.
    pub fn ddelta_level(&self) -> i32 {
        let n = self.n();
        let both: Vec<bool> = (0..n).map(|k| self.both_identities(k)).collect();
        largest(n - 1, |s| {
            both[..=s].iter().all(|&b| b) && self.exact_identity(s + 1)
        })
    }

    /// The same level read off the star-dual identities: all three spaces
    /// agree on `Λ^{2n−k}` for `k ≤ s`, and `Im δ ∩ ker d = Im dδ` on
    /// `Λ^{2n−s−1}`.
    pub fn ddelta_dual_level(&self) -> i32 {
        let (n, top) = (self.n(), self.dim());
        let both: Vec<bool> = (0..n).map(|k| self.both_identities(top - k)).collect();
        largest(n - 1, |s| {
            both[..=s].iter().all(|&b| b) && self.coexact_identity(top - s - 1)
        })
    }

    /// Largest `s ≤ n−1` with `i` bijective in every degree `k ≥ 2n−s`.
    pub fn i_level(&self) -> i32 {
        let (n, top) = (self.n(), self.dim());
        let bij: Vec<bool> = (0..n)
            .map(|j| self.map_i(top - j).expect("in range").bijective())
            .collect();
        largest(n - 1, |s| bij[..=s].iter().all(|&b| b))
    }

    fn harmonic_full(&self, k: usize) -> bool {
        self.harmonic(k).expect("in range").dim_hr == self.betti(k).expect("in range")
    }

    /// Largest `s ≤ n−1` with every class of degree `2n−k`, `k ≤ s`,
    /// harmonic.
    pub fn harmonic_level(&self) -> i32 {
        let (n, top) = (self.n(), self.dim());
        let full: Vec<bool> = (0..n).map(|k| self.harmonic_full(top - k)).collect();
        largest(n - 1, |s| full[..=s].iter().all(|&b| b))
    }

    /// `H^k_hr = H^k` for `k ≤ s+2` and `H^{2n−k}_hr = H^{2n−k}` for `k ≤ s`.
    pub fn harmonic_ranges(&self, s: i32) -> bool {
        let top = self.dim() as i32;
        (0..=(s + 2).min(top)).all(|k| self.harmonic_full(k as usize))
            && (0..=s).all(|k| self.harmonic_full((top - k) as usize))
    }

    /// `i` bijective for every `k ≤ s+1`.
    pub fn i_low_range(&self, s: i32) -> bool {
        (0..=(s + 1).min(self.dim() as i32))
            .all(|k| self.map_i(k as usize).expect("in range").bijective())
    }

    /// The harmonic decomposition identities at degrees `n−k` and `n+k`.
    pub fn decomposition_check(&self, k: usize) -> Result<DecompositionVerdict, CohomologyError> {
        let n = self.n();
        if k > n {
            return Err(CohomologyError::DegreeOutOfRange { degree: k, top: n });
        }
        let low = n - k;
        let hr_low = self.harmonic_classes(low)?;
        let mut sum = self.primitive_cohomology(low)?;
        if low >= 2 {
            let lifted = self.harmonic_classes(low - 2)?.map(&self.lefschetz_map(low - 2, 1)?)?;
            sum = sum.sum(&lifted)?;
        }
        let high = self.harmonic_classes(n + k)?;
        let image = hr_low.map(&self.lefschetz_map(low, k)?)?;
        Ok(DecompositionVerdict {
            k,
            primitive_sum: sum == hr_low,
            lefschetz_image: image == high,
        })
    }

    /// Certificates for the first failure of the dδ-lemma and of the
    /// bijectivity of `i`.
    pub fn witnesses(&self) -> Vec<Witness> {
        let mut out = Vec::new();
        let (n, top) = (self.n() as i32, self.dim());
        let first = |big: Subspace, k: usize, kind| {
            let q = Quotient::new(big, self.im_ddelta(k).expect("in range").clone())
                .expect("Im dδ lies in both intersections");
            let v = q.complement().basis_vectors().next().map(|v| v.to_vec());
            v.map(|v| Witness {
                kind,
                degree: k,
                form: Form::from_coordinates(top, k, &v).expect("length matches"),
            })
        };
        let s = self.ddelta_level();
        if s < n - 1 {
            let f = (s + 1) as usize;
            let w = if !self.coexact_identity(f) {
                first(self.coexact_closed(f).unwrap(), f, WitnessKind::CoexactNotDdelta)
            } else if !self.exact_identity(f) {
                first(self.exact_coclosed(f).unwrap(), f, WitnessKind::ExactNotDdelta)
            } else {
                first(self.exact_coclosed(f + 1).unwrap(), f + 1, WitnessKind::ExactNotDdelta)
            };
            out.extend(w);
        }
        let s = self.i_level();
        if s < n - 1 {
            let k = top - (s + 1) as usize;
            let map = self.map_i(k).expect("in range");
            if let Some(form) = map.kernel_witnesses.into_iter().next() {
                out.push(Witness {
                    kind: WitnessKind::KernelOfI,
                    degree: k,
                    form,
                });
            } else if !map.surjective {
                let h = self.cohomology(k).expect("in range");
                let image = self
                    .harmonic(k)
                    .expect("in range")
                    .harmonic_forms
                    .sum(h.coboundaries())
                    .expect("same ambient");
                let q = Quotient::new(h.cocycles().clone(), image).expect("closed forms");
                let v = q.complement().basis_vectors().next().map(|v| v.to_vec());
                if let Some(v) = v {
                    out.push(Witness {
                        kind: WitnessKind::CokernelOfI,
                        degree: k,
                        form: Form::from_coordinates(top, k, &v).expect("length matches"),
                    });
                }
            }
        }
        out
    }

    /// Computes every level independently and checks the relations between
    /// them. Level equalities and the harmonic/low-range checks are required
    /// only when the gate passes.
    pub fn theorem_consistency(&self) -> LevelReport {
        self.precompute();
        let n = self.n();
        let top = self.dim();
        let lefschetz_level = self.lefschetz_level();
        let ddelta_level = self.ddelta_level();
        let ddelta_dual_level = self.ddelta_dual_level();
        let i_level = self.i_level();
        let harmonic_level = self.harmonic_level();
        let harmonic_ranges_hold = self.harmonic_ranges(lefschetz_level);
        let i_low_range_holds = self.i_low_range(lefschetz_level);
        let duality_holds = (0..=top).all(|k| {
            self.exact_identity(k) == self.coexact_identity(top - k)
                && self.coexact_identity(k) == self.exact_identity(top - k)
        });
        let decomposition: Vec<DecompositionVerdict> = (0..=n)
            .map(|k| self.decomposition_check(k).expect("in range"))
            .collect();
        let i1_surjective = (0..=top).all(|k| self.i1_surjective(k).expect("in range"));
        let gate = self.gate();
        let ungated = duality_holds
            && ddelta_level == ddelta_dual_level
            && decomposition.iter().all(DecompositionVerdict::holds)
            && i1_surjective;
        let gated = lefschetz_level == ddelta_level
            && ddelta_level == i_level
            && harmonic_level == lefschetz_level
            && harmonic_ranges_hold
            && i_low_range_holds;
        LevelReport {
            lefschetz_level,
            ddelta_level,
            ddelta_dual_level,
            i_level,
            harmonic_level,
            harmonic_ranges_hold,
            i_low_range_holds,
            duality_holds,
            decomposition,
            i1_surjective,
            gate,
            witnesses: self.witnesses(),
            consistent: ungated && (!gate.passed() || gated),
        }
    }
}
