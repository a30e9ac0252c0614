mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use qcat_core::constructors::{all_functors, all_naturals, small_categories, FinCat, FinFunctor, FinNatural};
use qcat_core::context::{Backend, FdVect, FinSet, FromFunction};
use qcat_core::qcat::{
    compose_functors, identity_functor, validate_functor, validate_nat_transformation, QuantumFunctor,
};
use rand::Rng;

fn corpus() -> &'static [FinCat] {
    static CORPUS: OnceLock<Vec<FinCat>> = OnceLock::new();
    CORPUS.get_or_init(|| small_categories(2, 4))
}

fn pick(index: prop::sample::Index) -> &'static FinCat {
    &corpus()[index.index(corpus().len())]
}

fn unit_recovers_the_object_map<B: Backend>(functor: &QuantumFunctor<B>) -> Result<(), TestCaseError> {
    let through_arrows = functor.source.nu0().then(&functor.phi).unwrap();
    prop_assert_eq!(&through_arrows.then(functor.target.s()).unwrap(), &functor.f);
    prop_assert_eq!(&through_arrows.then(functor.target.t()).unwrap(), &functor.f);
    Ok(())
}

fn random_tables(rng: &mut impl Rng, c: &FinCat, d: &FinCat) -> FinFunctor {
    FinFunctor {
        source: c.clone(),
        target: d.clone(),
        objects: (0..c.object_count()).map(|_| rng.gen_range(0..d.object_count())).collect(),
        morphisms: (0..c.morphism_count()).map(|_| rng.gen_range(0..d.morphism_count())).collect(),
    }
}

fn lifted_verdict<B: FromFunction>(candidate: &FinFunctor) -> bool {
    validate_functor(&candidate.lift::<B>().unwrap()).passes()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lifted_functors_are_valid_and_recover_objects_from_the_unit(
        c in any::<prop::sample::Index>(),
        d in any::<prop::sample::Index>(),
        choice in any::<prop::sample::Index>(),
    ) {
        let functors = all_functors(pick(c), pick(d));
        prop_assume!(!functors.is_empty());
        let functor = &functors[choice.index(functors.len())];
        let set = functor.lift::<FinSet>().unwrap();
        let linear = functor.lift::<FdVect>().unwrap();
        prop_assert!(validate_functor(&set).passes(), "{:?}", validate_functor(&set).first_failure());
        prop_assert!(validate_functor(&linear).passes());
        unit_recovers_the_object_map(&set)?;
        unit_recovers_the_object_map(&linear)?;
    }

    #[test]
    fn functor_checks_agree_with_table_checks(
        c in any::<prop::sample::Index>(),
        d in any::<prop::sample::Index>(),
        seed in any::<u64>(),
    ) {
        prop_assume!(pick(d).object_count() > 0);
        let mut rng = common::rng(seed);
        let candidate = random_tables(&mut rng, pick(c), pick(d));
        let expected = candidate.validate().is_ok();
        prop_assert_eq!(lifted_verdict::<FinSet>(&candidate), expected);
        prop_assert_eq!(lifted_verdict::<FdVect>(&candidate), expected);
    }

    #[test]
    fn functors_are_closed_under_composition(
        indices in proptest::array::uniform3(any::<prop::sample::Index>()),
        choices in proptest::array::uniform2(any::<prop::sample::Index>()),
    ) {
        let [c, d, e] = indices.map(pick);
        let (first, second) = (all_functors(c, d), all_functors(d, e));
        prop_assume!(!first.is_empty() && !second.is_empty());
        let f = first[choices[0].index(first.len())].lift::<FdVect>().unwrap();
        let g = second[choices[1].index(second.len())].lift::<FdVect>().unwrap();
        let composite = compose_functors(&f, &g).unwrap();
        prop_assert!(validate_functor(&composite).passes());
        unit_recovers_the_object_map(&composite)?;
        prop_assert_eq!(&compose_functors(&identity_functor(&f.source), &f).unwrap(), &f);
        prop_assert_eq!(&compose_functors(&f, &identity_functor(&f.target)).unwrap(), &f);
    }

    #[test]
    fn natural_checks_agree_with_naturality_squares(
        c in any::<prop::sample::Index>(),
        d in any::<prop::sample::Index>(),
        choices in proptest::array::uniform2(any::<prop::sample::Index>()),
        seed in any::<u64>(),
    ) {
        let functors = all_functors(pick(c), pick(d));
        prop_assume!(!functors.is_empty());
        let ff = &functors[choices[0].index(functors.len())];
        let gg = &functors[choices[1].index(functors.len())];
        for natural in all_naturals(ff, gg) {
            let lifted = natural.lift::<FinSet>().unwrap();
            prop_assert!(validate_nat_transformation(&lifted).passes());
        }
        // arbitrary components with the right endpoints
        let target = pick(d);
        let mut rng = common::rng(seed);
        let components: Option<Vec<usize>> = (0..ff.source.object_count())
            .map(|x| {
                let options: Vec<usize> = (0..target.morphism_count())
                    .filter(|&b| target.dom[b] == ff.objects[x] && target.cod[b] == gg.objects[x])
                    .collect();
                (!options.is_empty()).then(|| options[rng.gen_range(0..options.len())])
            })
            .collect();
        prop_assume!(components.is_some());
        let candidate = FinNatural { source: ff.clone(), target: gg.clone(), components: components.unwrap() };
        let lifted = candidate.lift::<FdVect>().unwrap();
        prop_assert_eq!(validate_nat_transformation(&lifted).passes(), candidate.validate().is_ok());
    }
}
