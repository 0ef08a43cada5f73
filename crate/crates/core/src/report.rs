//! One-call analysis of a document, with a serialisable report.

use serde::{Deserialize, Serialize};

use crate::cohomology::{Cohomology, WitnessKind};
use crate::dsl::{format_rational, AlgebraDocument, DocumentError};
use crate::suite::{run_suite, SuiteReport};
use crate::Form;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Also run the invariant suite on the instance.
    pub invariants: bool,
    /// Seed for the random forms used by the invariant suite.
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub kind: WitnessKind,
    pub degree: usize,
    pub form: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gates {
    pub unimodular: bool,
    pub poincare_duality: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub completely_solvable_heuristic: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyChecks {
    pub harmonic_ranges: bool,
    pub harmonic_level: i32,
    pub i_low_range: bool,
    pub ddelta_dual_level: i32,
    pub duality: bool,
    pub harmonic_decomposition: bool,
    pub i1_surjective: bool,
}

/// The constant `c` with `*α = c·L^{n−k}(α)` on primitive `k`-forms, when
/// one constant serves the whole degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarConstant {
    pub degree: usize,
    pub constant: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub dim: usize,
    pub names: Vec<String>,
    pub betti: Vec<usize>,
    pub hr_dims: Vec<usize>,
    pub hdelta_dims: Vec<usize>,
    pub lefschetz_level: i32,
    pub ddelta_level: i32,
    pub i_level: i32,
    pub witnesses: Vec<WitnessReport>,
    pub gates: Gates,
    pub checks: ConsistencyChecks,
    pub star_constants: Vec<StarConstant>,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<SuiteReport>,
}

fn star_constants(c: &Cohomology) -> Vec<StarConstant> {
    let s = c.structure();
    (0..=s.n())
        .map(|k| {
            let prim = s.primitive_subspace(k).expect("k ≤ n");
            let mut common = None;
            let mut uniform = true;
            for v in prim.basis_vectors() {
                let f = Form::from_coordinates(s.dim(), k, v).expect("length");
                match (s.star_proportionality(&f), &common) {
                    (None, _) => uniform = false,
                    (Some(x), None) => common = Some(x),
                    (Some(x), Some(y)) if x != *y => uniform = false,
                    _ => {}
                }
            }
            StarConstant {
                degree: k,
                constant: common.filter(|_| uniform).map(|x| format_rational(&x)),
            }
        })
        .collect()
}

/// Analyses a document from scratch.
pub fn analyze(doc: &AlgebraDocument, options: AnalyzeOptions) -> Result<AnalysisReport, DocumentError> {
    let structure = doc.structure()?;
    let algebra = structure.algebra().clone();
    let c = Cohomology::new(structure);
    let levels = c.theorem_consistency();
    let names = doc.names.clone();
    let witnesses = levels
        .witnesses
        .iter()
        .map(|w| WitnessReport {
            kind: w.kind,
            degree: w.degree,
            form: w.form.display_with(&names).to_string(),
        })
        .collect();
    let gates = Gates {
        unimodular: levels.gate.unimodular,
        poincare_duality: levels.gate.poincare_duality,
        nilpotent: algebra.is_nilpotent()?,
        solvable: algebra.is_solvable()?,
        completely_solvable_heuristic: algebra.completely_solvable_heuristic().passed(),
    };
    let checks = ConsistencyChecks {
        harmonic_ranges: levels.harmonic_ranges_hold,
        harmonic_level: levels.harmonic_level,
        i_low_range: levels.i_low_range_holds,
        ddelta_dual_level: levels.ddelta_dual_level,
        duality: levels.duality_holds,
        harmonic_decomposition: levels.decomposition.iter().all(|d| d.holds()),
        i1_surjective: levels.i1_surjective,
    };
    let invariants = options
        .invariants
        .then(|| run_suite(&c, doc, options.seed));
    Ok(AnalysisReport {
        dim: doc.dim,
        betti: c.betti_numbers(),
        hr_dims: c.harmonic_dims(),
        hdelta_dims: c.h_delta_dims(),
        lefschetz_level: levels.lefschetz_level,
        ddelta_level: levels.ddelta_level,
        i_level: levels.i_level,
        witnesses,
        gates,
        checks,
        star_constants: star_constants(&c),
        consistent: levels.consistent,
        invariants,
        names,
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}
