//! Random search for instances of a prescribed Lefschetz level.

use rayon::prelude::*;

use crate::cohomology::Cohomology;
use crate::dsl::AlgebraDocument;
use crate::random::{random_instance, trial_rng, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub dim: usize,
    pub target_s: i32,
    pub trials: usize,
    pub seed: u64,
    pub family: Family,
    /// Keep only non-abelian nilpotent algebras.
    pub non_abelian_nilpotent: bool,
}

/// Instances whose Lefschetz level is exactly `target_s`, without
/// duplicates, in trial order.
pub fn search(config: SearchConfig) -> Vec<AlgebraDocument> {
    let hits: Vec<Option<AlgebraDocument>> = (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(config.seed, t as u64);
            let (g, omega) = random_instance(config.family, config.dim, &mut rng);
            if config.non_abelian_nilpotent
                && (g.is_abelian() || !g.is_nilpotent().unwrap_or(false))
            {
                return None;
            }
            let doc = AlgebraDocument::from_parts(&g, omega);
            let c = Cohomology::new(doc.structure().ok()?);
            (c.lefschetz_level() == config.target_s).then_some(doc)
        })
        .collect();
    let mut out: Vec<AlgebraDocument> = Vec::new();
    for doc in hits.into_iter().flatten() {
        if !out.contains(&doc) {
            out.push(doc);
        }
    }
    out
}
