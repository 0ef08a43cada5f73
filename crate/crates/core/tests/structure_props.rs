mod common;

use common::q;
use lefschetz_core::exterior::binomial;
use lefschetz_core::random::{random_instance, trial_rng, Family};
use lefschetz_core::suite::run_suite;
use lefschetz_core::{AlgebraDocument, Cohomology, Form};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::Nilpotent), Just(Family::AlmostNilpotent)]
}

fn document(family: Family, dim: usize, seed: u64) -> AlgebraDocument {
    let (g, omega) = random_instance(family, dim, &mut trial_rng(seed, 0));
    AlgebraDocument::from_parts(&g, omega)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn print_then_parse_is_identity(family in family(), dim in prop_oneof![Just(4usize), Just(6)], seed in 0u64..10_000) {
        let doc = document(family, dim, seed);
        let text = doc.to_string();
        let back = AlgebraDocument::parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn invariant_suite_holds_on_random_instances(family in family(), seed in 0u64..10_000) {
        let doc = document(family, 4, seed);
        let c = Cohomology::new(doc.structure().unwrap());
        let r = run_suite(&c, &doc, seed);
        prop_assert!(r.passed(), "{:?}\n{}", r.first_failure(), doc);
    }

    #[test]
    fn cohomology_counts(family in family(), dim in prop_oneof![Just(4usize), Just(6)], seed in 0u64..10_000) {
        let doc = document(family, dim, seed);
        let c = Cohomology::new(doc.structure().unwrap());
        let betti = c.betti_numbers();
        let hr = c.harmonic_dims();
        let hd = c.h_delta_dims();
        let euler: i64 = betti.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(euler, 0);
        prop_assert_eq!(betti.len(), dim + 1);
        for k in 0..=dim {
            prop_assert!(hr[k] <= betti[k]);
            prop_assert!(betti[k] <= binomial(dim, k));
            // a unimodular algebra satisfies Poincaré duality
            prop_assert_eq!(betti[k], betti[dim - k]);
            prop_assert_eq!(hd[k], hd[dim - k]);
        }
        prop_assert_eq!(betti[0], 1);
        prop_assert_eq!(hr[0], 1);
    }

    #[test]
    fn class_of_representative_round_trips(seed in 0u64..10_000, k in 0usize..=4) {
        let doc = document(Family::Nilpotent, 4, seed);
        let c = Cohomology::new(doc.structure().unwrap());
        let b = c.betti(k).unwrap();
        let coords: Vec<_> = (0..b).map(|i| q(i as i64 + 1)).collect();
        let rep = c.representative(k, &coords).unwrap();
        prop_assert!(doc.structure().unwrap().d(&rep).is_zero());
        prop_assert_eq!(c.class_of(&rep).unwrap(), coords);
    }

    #[test]
    fn analysis_is_deterministic(seed in 0u64..10_000) {
        let doc = document(Family::AlmostNilpotent, 6, seed);
        let a = lefschetz_core::analyze(&doc, Default::default()).unwrap().to_json();
        let b = lefschetz_core::analyze(&doc, Default::default()).unwrap().to_json();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn exact_forms_have_zero_class() {
    let doc = document(Family::Nilpotent, 6, 17);
    let s = doc.structure().unwrap();
    let c = Cohomology::new(s.clone());
    for k in 1..=6 {
        for f in s.basis_forms(k - 1) {
            let df: Form = s.d(&f);
            assert!(c.class_of(&df).unwrap().iter().all(|x| *x == q(0)));
        }
    }
}
