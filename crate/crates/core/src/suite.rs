//! The invariant suite: operator identities, primitive-form identities and
//! cohomological consistency, each reported with a first counterexample.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::Cohomology;
use crate::dsl::AlgebraDocument;
use crate::exterior::{basis, binomial, operator_matrix, Form};
use crate::random::{random_instance, trial_rng, Family};
use crate::symplectic::{c_constant, Operator, SymplecticStructure};
use crate::{rat, DenseMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// The first offending form, when the check failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    /// The instance, in `.lie` syntax.
    pub document: String,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Check names, in execution order.
pub mod names {
    pub const STAR_INVOLUTION: &str = "*² = Id";
    pub const DELTA_AGREE: &str = "δ_star = δ_koszul";
    pub const D_SQUARED: &str = "d² = 0";
    pub const DELTA_SQUARED: &str = "δ² = 0";
    pub const ANTICOMMUTE: &str = "dδ + δd = 0";
    pub const L_DELTA: &str = "[L,δ] = −d";
    pub const IOTA_D: &str = "[ι_G,d] = δ";
    pub const L_D: &str = "[L,d] = 0";
    pub const IOTA_DELTA: &str = "[ι_G,δ] = 0";
    pub const IOTA_STAR: &str = "ι_G = −*L*";
    pub const IOTA_L: &str = "[ι_G,L] = −A";
    pub const A_IOTA: &str = "[A,ι_G] = 2ι_G";
    pub const A_L: &str = "[A,L] = −2L";
    pub const LEFSCHETZ_FORMS: &str = "L^k: Λ^{n−k} → Λ^{n+k} bijective";
    pub const PAIRING: &str = "β∧*α = Λ^k(G)(β,α)·v_M";
    pub const PRIMITIVITY: &str = "ι_G α = 0 ⟺ L^{n−k+1} α = 0";
    pub const STAR_PRIMITIVE: &str = "*α ∝ L^{n−k}α for primitive α";
    pub const IOTA_POWERS: &str = "ι_G^j L^j α = (−1)^j c_{j,k} α";
    pub const LEPAGE: &str = "Lepage round trip and uniqueness";
    pub const DDELTA_L: &str = "dδ L^p = L^p dδ, dδ preserves primitivity";
    pub const DELTA_EXACT: &str = "δ L^p β = d(L^p γ + p L^{p−1} β) when δβ = dγ";
    pub const LOW_HARMONIC: &str = "H^k_hr = H^k for k ≤ 2";
    pub const TOP_HARMONIC: &str = "dim H^{2n}_hr = rank L^n on H⁰";
    pub const I1_SURJECTIVE: &str = "i₁ onto H_hr";
    pub const DUALITY: &str = "dδ identities dual under *";
    pub const DECOMPOSITION: &str = "harmonic decomposition";
    pub const LEVELS: &str = "levels agree (gated)";
    pub const NILMANIFOLD: &str = "nilpotent: level 0, abelian: level n−1";
}

type Verdict = Result<(), Form>;

fn cols(dim: usize, k: i64) -> usize {
    if k < 0 {
        0
    } else {
        binomial(dim, k as usize)
    }
}

/// Matrix of `op` on `Λ^k`, with empty shapes outside `0..=2n`.
fn op(s: &SymplecticStructure, o: Operator, k: i64) -> DenseMatrix {
    let dim = s.dim() as i64;
    let target = match o {
        Operator::D => k + 1,
        Operator::Delta => k - 1,
        Operator::L => k + 2,
        Operator::IotaG => k - 2,
        Operator::Star => dim - k,
    };
    if k < 0 || k > dim {
        return DenseMatrix::zeros(cols(s.dim(), target), 0);
    }
    let m = s.matrix(o, k as usize);
    if target < 0 || target > dim {
        DenseMatrix::zeros(0, m.cols())
    } else {
        m.clone()
    }
}

fn mul(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    a.mul(b).expect("composable shapes")
}

/// Compares two maps on `Λ^k`; on mismatch returns the first basis form
/// on which they differ.
fn same_map(dim: usize, k: usize, lhs: &DenseMatrix, rhs: &DenseMatrix) -> Verdict {
    if lhs == rhs {
        return Ok(());
    }
    let b = basis(dim, k);
    for (j, &m) in b.iter().enumerate() {
        if lhs.rows() != rhs.rows() || lhs.column(j) != rhs.column(j) {
            return Err(Form::monomial(dim, m, rat(1)));
        }
    }
    Err(Form::zero(dim, k))
}

fn scalar_on(dim: usize, k: i64, c: i64) -> DenseMatrix {
    DenseMatrix::scalar(cols(dim, k), &rat(c))
}

fn all_degrees(s: &SymplecticStructure, f: impl Fn(usize) -> Verdict) -> Verdict {
    (0..=s.dim()).try_for_each(f)
}

fn operator_checks(s: &SymplecticStructure) -> Vec<(&'static str, Verdict)> {
    use Operator::*;
    let dim = s.dim();
    let n = s.n() as i64;
    let o = |x, k: usize| op(s, x, k as i64);
    let at = |x, k: i64| op(s, x, k);
    vec![
        (
            names::STAR_INVOLUTION,
            all_degrees(s, |k| {
                same_map(dim, k, &mul(&at(Star, (dim - k) as i64), &o(Star, k)), &scalar_on(dim, k as i64, 1))
            }),
        ),
        (
            names::DELTA_AGREE,
            all_degrees(s, |k| {
                let koszul = if k == 0 {
                    DenseMatrix::zeros(0, 1)
                } else {
                    operator_matrix(dim, k, k - 1, |f| s.delta_koszul(f))
                };
                same_map(dim, k, &o(Delta, k), &koszul)
            }),
        ),
        (
            names::D_SQUARED,
            all_degrees(s, |k| {
                let dd = mul(&at(D, k as i64 + 1), &o(D, k));
                same_map(dim, k, &dd, &DenseMatrix::zeros(dd.rows(), dd.cols()))
            }),
        ),
        (
            names::DELTA_SQUARED,
            all_degrees(s, |k| {
                let m = mul(&at(Delta, k as i64 - 1), &o(Delta, k));
                same_map(dim, k, &m, &DenseMatrix::zeros(m.rows(), m.cols()))
            }),
        ),
        (
            names::ANTICOMMUTE,
            all_degrees(s, |k| {
                let k1 = k as i64;
                let lhs = mul(&at(D, k1 - 1), &o(Delta, k));
                let rhs = mul(&at(Delta, k1 + 1), &o(D, k)).scale(&rat(-1));
                same_map(dim, k, &lhs, &rhs)
            }),
        ),
        (
            names::L_DELTA,
            all_degrees(s, |k| {
                let k1 = k as i64;
                let lhs = mul(&at(L, k1 - 1), &o(Delta, k))
                    .sub(&mul(&at(Delta, k1 + 2), &o(L, k)))
                    .unwrap();
                same_map(dim, k, &lhs, &o(D, k).scale(&rat(-1)))
            }),
        ),
        (
            names::IOTA_D,
            all_degrees(s, |k| {
                let k1 = k as i64;
                let lhs = mul(&at(IotaG, k1 + 1), &o(D, k))
                    .sub(&mul(&at(D, k1 - 2), &o(IotaG, k)))
                    .unwrap();
                same_map(dim, k, &lhs, &o(Delta, k))
            }),
        ),
        (
            names::L_D,
            all_degrees(s, |k| {
                let k1 = k as i64;
                let lhs = mul(&at(L, k1 + 1), &o(D, k))
                    .sub(&mul(&at(D, k1 + 2), &o(L, k)))
                    .unwrap();
                same_map(dim, k, &lhs, &DenseMatrix::zeros(lhs.rows(), lhs.cols()))
            }),
        ),
        (
            names::IOTA_DELTA,
            all_degrees(s, |k| {
                let k1 = k as i64;
                let lhs = mul(&at(IotaG, k1 - 1), &o(Delta, k))
                    .sub(&mul(&at(Delta, k1 - 2), &o(IotaG, k)))
                    .unwrap();
                same_map(dim, k, &lhs, &DenseMatrix::zeros(lhs.rows(), lhs.cols()))
            }),
        ),
        (
            names::IOTA_STAR,
            all_degrees(s, |k| {
                let k1 = k as i64;
                let d = dim as i64;
                // Λ^k → Λ^{2n−k} → Λ^{2n−k+2} → Λ^{k−2}
                let rhs = mul(&at(Star, d - k1 + 2), &mul(&at(L, d - k1), &o(Star, k))).scale(&rat(-1));
                same_map(dim, k, &o(IotaG, k), &rhs)
            }),
        ),
        (
            names::IOTA_L,
            all_degrees(s, |k| {
                let k1 = k as i64;
                let lhs = mul(&at(IotaG, k1 + 2), &o(L, k))
                    .sub(&mul(&at(L, k1 - 2), &o(IotaG, k)))
                    .unwrap();
                same_map(dim, k, &lhs, &scalar_on(dim, k1, k1 - n))
            }),
        ),
        (
            names::A_IOTA,
            all_degrees(s, |k| {
                // [A, ι_G] = ((n−k+2) − (n−k))·ι_G
                let k1 = k as i64;
                let lhs = o(IotaG, k).scale(&rat(n - (k1 - 2))).sub(&o(IotaG, k).scale(&rat(n - k1))).unwrap();
                same_map(dim, k, &lhs, &o(IotaG, k).scale(&rat(2)))
            }),
        ),
        (
            names::A_L,
            all_degrees(s, |k| {
                let k1 = k as i64;
                let lhs = o(L, k).scale(&rat(n - (k1 + 2))).sub(&o(L, k).scale(&rat(n - k1))).unwrap();
                same_map(dim, k, &lhs, &o(L, k).scale(&rat(-2)))
            }),
        ),
        (
            names::LEFSCHETZ_FORMS,
            (0..=s.n()).try_for_each(|k| {
                let m = s.lefschetz_matrix(s.n() - k, k);
                if m.rank() == m.cols() && m.rows() == m.cols() {
                    Ok(())
                } else {
                    Err(m.kernel().basis_vectors().next().map_or_else(
                        || Form::zero(dim, s.n() - k),
                        |v| Form::from_coordinates(dim, s.n() - k, v).unwrap(),
                    ))
                }
            }),
        ),
        (
            names::PAIRING,
            all_degrees(s, |k| {
                let forms = s.basis_forms(k);
                for b in &forms {
                    for a in &forms {
                        let lhs = b.wedge(&s.star(a));
                        let rhs = s.volume().scale(&s.pairing(b, a).expect("equal degrees"));
                        if lhs != rhs {
                            return Err(a.clone());
                        }
                    }
                }
                Ok(())
            }),
        ),
    ]
}

fn random_form<R: Rng>(dim: usize, k: usize, rng: &mut R) -> Form {
    let coords: Vec<Rational> = (0..binomial(dim, k))
        .map(|_| rat(rng.gen_range(-3..=3)))
        .collect();
    Form::from_coordinates(dim, k, &coords).expect("length")
}

/// Primitive components of Lepage decompositions of random forms in every
/// degree up to `n`.
fn random_primitives<R: Rng>(s: &SymplecticStructure, rng: &mut R, per_degree: usize) -> Vec<Form> {
    let mut out = Vec::new();
    for i in 0..=s.n() {
        for _ in 0..per_degree {
            let f = random_form(s.dim(), i, rng);
            let dec = s.lepage_decompose(&f).expect("degree ≤ n");
            out.extend(dec.components.into_iter().filter(|c| !c.is_zero()));
        }
    }
    out
}

fn first_failure<'a, I>(items: I, ok: impl Fn(&Form) -> bool) -> Verdict
where
    I: IntoIterator<Item = &'a Form>,
{
    match items.into_iter().find(|f| !ok(f)) {
        Some(f) => Err(f.clone()),
        None => Ok(()),
    }
}

/// Equality that ignores the nominal degree of zero forms.
fn equal(a: &Form, b: &Form) -> bool {
    a == b || (a.is_zero() && b.is_zero())
}

fn primitive_checks<R: Rng>(s: &SymplecticStructure, rng: &mut R) -> Vec<(&'static str, Verdict)> {
    let n = s.n();
    let prims = random_primitives(s, rng, 3);
    let forms: Vec<Form> = (0..=n)
        .flat_map(|i| (0..3).map(move |_| i))
        .map(|i| random_form(s.dim(), i, rng))
        .collect();
    let ddelta = |f: &Form| s.d(&s.delta(f));
    vec![
        (
            names::PRIMITIVITY,
            first_failure(&forms, |f| s.primitivity(f).expect("k ≤ n").agree()),
        ),
        (
            names::STAR_PRIMITIVE,
            first_failure(&prims, |a| s.star_proportionality(a).is_some()),
        ),
        (
            names::IOTA_POWERS,
            first_failure(&prims, |a| {
                let k = a.degree();
                (0..=n - k).all(|j| {
                    let mut x = s.op_l_pow(a, j);
                    for _ in 0..j {
                        x = s.iota_g(&x);
                    }
                    let c = c_constant(n, j, k).expect("j ≤ n−k");
                    let c = if j % 2 == 1 { -c } else { c };
                    x == a.scale(&c)
                })
            }),
        ),
        (
            names::LEPAGE,
            first_failure(&forms, |f| {
                let dec = s.lepage_decompose(f).expect("degree ≤ n");
                let prim = dec
                    .components
                    .iter()
                    .all(|c| s.is_primitive(c).expect("degree ≤ n"));
                let back = s.lepage_reconstruct(&dec);
                prim && back == *f && s.lepage_decompose(&back).expect("degree ≤ n") == dec
            }),
        ),
        (
            names::DDELTA_L,
            first_failure(&forms, |f| {
                let commutes = (0..=n).all(|p| equal(&ddelta(&s.op_l_pow(f, p)), &s.op_l_pow(&ddelta(f), p)));
                let keeps = !s.is_primitive(f).expect("k ≤ n")
                    || s.is_primitive(&ddelta(f)).expect("k ≤ n");
                commutes && keeps
            }),
        ),
        (
            names::DELTA_EXACT,
            (1..s.dim()).try_for_each(|k| {
                // β = dη + κ with δκ = 0, so δβ = −dδη and γ = −δη
                let eta = random_form(s.dim(), k - 1, rng);
                let ker = s.matrix(Operator::Delta, k).kernel();
                let mut kappa = Form::zero(s.dim(), k);
                for v in ker.basis_vectors() {
                    let c = rat(rng.gen_range(-2..=2));
                    kappa = kappa.add(&Form::from_coordinates(s.dim(), k, v).unwrap().scale(&c));
                }
                let beta = s.d(&eta).add(&kappa);
                let gamma = s.delta(&eta).neg();
                if !equal(&s.delta(&beta), &s.d(&gamma)) {
                    return Err(beta);
                }
                for p in 1..=n {
                    let lhs = s.delta(&s.op_l_pow(&beta, p));
                    let inner = s
                        .op_l_pow(&gamma, p)
                        .add(&s.op_l_pow(&beta, p - 1).scale(&rat(p as i64)));
                    if !equal(&lhs, &s.d(&inner)) {
                        return Err(beta);
                    }
                }
                Ok(())
            }),
        ),
    ]
}

fn cohomology_checks(c: &Cohomology) -> Vec<(&'static str, Verdict)> {
    let s = c.structure();
    let dim = s.dim();
    let n = s.n();
    let levels = c.theorem_consistency();
    let level_form = |ok: bool| if ok { Ok(()) } else { Err(Form::zero(dim, 0)) };
    let g = s.algebra();
    let nil = if g.is_abelian() {
        levels.lefschetz_level == n as i32 - 1
    } else if g.is_nilpotent().unwrap_or(false) {
        levels.lefschetz_level == 0
    } else {
        true
    };
    let top_rank = c.lefschetz_map(0, n).expect("in range").rank();
    vec![
        (
            names::LOW_HARMONIC,
            (0..=2.min(dim)).try_for_each(|k| {
                let h = c.harmonic(k).expect("in range");
                if h.dim_hr == c.betti(k).expect("in range") {
                    Ok(())
                } else {
                    Err(Form::zero(dim, k))
                }
            }),
        ),
        (
            names::TOP_HARMONIC,
            level_form(c.harmonic(dim).expect("in range").dim_hr == top_rank),
        ),
        (names::I1_SURJECTIVE, level_form(levels.i1_surjective)),
        (
            names::DUALITY,
            level_form(levels.duality_holds && levels.ddelta_level == levels.ddelta_dual_level),
        ),
        (
            names::DECOMPOSITION,
            level_form(levels.decomposition.iter().all(|d| d.holds())),
        ),
        (names::LEVELS, level_form(levels.consistent)),
        (names::NILMANIFOLD, level_form(nil)),
    ]
}

/// Runs every check on one instance. `seed` drives the random forms.
pub fn run_suite(c: &Cohomology, doc: &AlgebraDocument, seed: u64) -> SuiteReport {
    let s = c.structure();
    let mut rng = trial_rng(seed, 0);
    let mut verdicts = operator_checks(s);
    verdicts.extend(primitive_checks(s, &mut rng));
    verdicts.extend(cohomology_checks(c));
    let names = &doc.names;
    SuiteReport {
        document: doc.to_string(),
        checks: verdicts
            .into_iter()
            .map(|(name, v)| CheckOutcome {
                name: name.to_string(),
                passed: v.is_ok(),
                counterexample: v.err().map(|f| f.display_with(names).to_string()),
            })
            .collect(),
    }
}

/// Runs the suite on a document.
pub fn run_suite_on_document(
    doc: &AlgebraDocument,
    seed: u64,
) -> Result<SuiteReport, crate::dsl::DocumentError> {
    let c = Cohomology::new(doc.structure()?);
    Ok(run_suite(&c, doc, seed))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub dim: usize,
    pub trials: usize,
    pub family: Family,
}

/// Runs the suite on `trials` random instances (trial `t` seeded with
/// `seed + t`), in parallel. Reports come back in trial order.
pub fn run_random_suite(config: SuiteConfig) -> Vec<SuiteReport> {
    (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(config.seed, t as u64);
            let (g, omega) = random_instance(config.family, config.dim, &mut rng);
            let doc = AlgebraDocument::from_parts(&g, omega);
            let s = doc.structure().expect("generated instances are symplectic");
            run_suite(&Cohomology::new(s), &doc, rng.gen())
        })
        .collect()
}
