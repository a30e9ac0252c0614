mod common;

use proptest::prelude::*;
use qcat_core::constructors::{from_small_category, small_categories, FinCat};
use qcat_core::context::{Backend, FdVect, FinSet};
use qcat_core::linalg::ExactMatrix;
use qcat_core::quantum::{check_axiom, check_axioms, gamma_r_maps, QuantumCategory, Verdict};

fn gating_is_consistent<B: Backend>(q: &QuantumCategory<B>) -> Result<(), TestCaseError> {
    let report = check_axioms(q);
    let a2 = report.axiom(2).is_pass();
    let right_maps = report
        .prerequisites
        .iter()
        .filter(|(name, _)| name == "unit agreement" || name == "right map on composable pairs")
        .all(|(_, v)| v.is_pass());
    if !a2 {
        prop_assert!(matches!(report.axiom(3), Verdict::Skipped { .. }), "{:?}", report.axiom(3));
        prop_assert!(matches!(check_axiom(q, 3), Verdict::Skipped { .. }), "axiom 3 decided without axiom 2");
        prop_assert!(gamma_r_maps(q).is_err());
    } else {
        prop_assert_eq!(&check_axiom(q, 3), report.axiom(3));
        prop_assert_eq!(gamma_r_maps(q).is_ok(), right_maps);
    }
    for k in [1, 2, 4, 6] {
        prop_assert_eq!(&check_axiom(q, k), report.axiom(k));
    }
    Ok(())
}

fn corpus() -> Vec<FinCat> {
    small_categories(2, 4)
}

fn right_maps_exist<B: Backend>(q: &QuantumCategory<B>) -> bool {
    check_axiom(q, 2).is_pass() && gamma_r_maps(q).is_ok()
}

#[test]
fn axiom_2_yields_the_right_maps_on_the_corpus() {
    for cat in corpus() {
        assert!(right_maps_exist(&from_small_category::<FinSet>(&cat).unwrap()), "{:?}", cat.morphisms);
        assert!(right_maps_exist(&from_small_category::<FdVect>(&cat).unwrap()), "{:?}", cat.morphisms);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn table_mutants_pass_exactly_when_they_are_categories(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let cat = common::random_category(&mut rng, 3, 6);
        let mutant = common::mutate_table(&mut rng, &cat);
        let is_category = mutant.validate().is_ok();
        let report = check_axioms(&common::raw_category::<FinSet>(&mutant));
        prop_assert_eq!(report.passes(), is_category, "{:?}", report.first_failure());
        if !is_category {
            prop_assert!(report.failures().iter().all(|f| !f.witness.label.is_empty()));
        }
    }

    #[test]
    fn linear_table_mutants_pass_exactly_when_they_are_categories(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let cat = common::random_category(&mut rng, 2, 5);
        let mutant = common::mutate_table(&mut rng, &cat);
        let report = check_axioms(&common::raw_category::<FdVect>(&mutant));
        prop_assert_eq!(report.passes(), mutant.validate().is_ok(), "{:?}", report.first_failure());
    }

    #[test]
    fn axiom_3_waits_for_axiom_2_on_set_mutants(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let cat = common::random_category(&mut rng, 3, 6);
        gating_is_consistent(&common::raw_category::<FinSet>(&common::mutate_table(&mut rng, &cat)))?;
    }

    #[test]
    fn axiom_3_waits_for_axiom_2_on_linear_mutants(seed in any::<u64>(), which in 0usize..2) {
        let mut rng = common::rng(seed);
        let cat = common::random_category(&mut rng, 2, 4);
        let q = from_small_category::<FdVect>(&cat).unwrap();
        let mutant = if which == 0 {
            q.with_structure(common::mutate_morphism(&mut rng, q.nu2()), q.nu0().clone())
        } else {
            q.with_structure(q.nu2().clone(), common::mutate_morphism(&mut rng, q.nu0()))
        }
        .unwrap();
        prop_assert!(!check_axioms(&mutant).passes());
        gating_is_consistent(&mutant)?;
    }

    #[test]
    fn zero_composition_breaks_axiom_2_or_later(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let cat = common::random_category(&mut rng, 2, 4);
        let q = from_small_category::<FdVect>(&cat).unwrap();
        let zero = ExactMatrix::zeros(q.nu2().target().dim(), q.nu2().source().dim());
        let nu2 = qcat_core::context::Morphism::new(q.nu2().source().clone(), q.nu2().target().clone(), zero).unwrap();
        let mutant = q.with_structure(nu2, q.nu0().clone()).unwrap();
        prop_assert!(!check_axioms(&mutant).passes());
        gating_is_consistent(&mutant)?;
    }
}
