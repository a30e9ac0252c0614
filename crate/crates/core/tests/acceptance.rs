//! The six acceptance criteria. Each runs inside `catch_unwind` so that every
//! criterion reports a line even when an earlier one fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use qcat_core::comod::{
    associator, bidual_counit, bidual_unit, corestrict, corestrict_along_unit, extend, extend_along_unit,
    identity_comodule, left_unitor, right_unitor, star_adjunction, Comodule, Comonoid, ComonoidMap,
};
use qcat_core::constructors::{
    all_functors, all_naturals, bialgebra_category, from_bialgebra, from_hopf_group_coalgebra, from_small_category,
    small_categories, to_small_category, Bialgebra, FinCat, FinFunctor, HopfGroupCoalgebraData,
};
use qcat_core::context::{
    coreflexive_equalizer, coreflexive_equalizer_checked, function, Backend, FdVect, FinSet, FromFunction, Morphism,
    Object,
};
use qcat_core::examples::triangular_coalgebra;
use qcat_core::linalg::{rat, ExactMatrix};
use qcat_core::qcat::{
    compose_functors, identity_functor, validate_functor, validate_nat_transformation, QuantumFunctor,
};
use qcat_core::quantum::{check_axioms, QuantumCategory};
use rand::seq::SliceRandom;
use rand::Rng;

use common::*;

type Outcome = Result<String, String>;

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    ensure(start.elapsed() <= budget, || format!("took {:.1?}, budget {budget:?}", start.elapsed()))
}

fn corpus() -> Vec<FinCat> {
    small_categories(2, 4)
}

fn sampled(count: usize) -> Vec<FinCat> {
    let mut r = rng(0x5eed);
    (0..count).map(|_| random_category(&mut r, 3, 6)).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut cats = corpus();
    let enumerated = cats.len();
    cats.extend(sampled(30));
    for cat in &cats {
        let q = from_small_category::<FinSet>(cat).map_err(|e| format!("{cat:?}: {e}"))?;
        let report = check_axioms(&q);
        ensure(report.passes(), || format!("{:?}: {:?}", cat.morphisms, report.first_failure()))?;
        let back = to_small_category(&q).map_err(|e| e.to_string())?;
        ensure(&back == cat, || format!("round trip changed {:?}", cat.morphisms))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{enumerated} enumerated and 30 sampled categories in {:.1?}", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut r = rng(2);
    let c2 = FinCat::cyclic_group(2);
    let c3 = FinCat::cyclic_group(3);
    let s3 = FinCat::symmetric_group_3();
    let mut candidates: Vec<(String, Bialgebra)> = vec![
        ("Q[C2]".into(), group_algebra(&c2)),
        ("Q[C3]".into(), group_algebra(&c3)),
        ("Q[S3]".into(), group_algebra(&s3)),
        ("M2 with comatrix coalgebra".into(), Bialgebra::matrix_non_example(2).unwrap()),
    ];
    let monoids: Vec<FinCat> =
        (1..4).flat_map(|extra| qcat_core::constructors::categories_with_homs(&[vec![extra]])).collect();
    while candidates.len() < 24 {
        let monoid = monoids.choose(&mut r).unwrap();
        let base = if r.gen_bool(0.5) { group_algebra(monoid) } else { function_algebra(monoid) };
        let n = base.dim();
        let transported = base.transport(&random_invertible(&mut r, n)).unwrap();
        let candidate = if r.gen_bool(0.5) {
            transported
        } else {
            let mut b = transported;
            match r.gen_range(0..4) {
                0 => b.mult = mutate_entry(&mut r, &b.mult).0,
                1 => b.comult = mutate_entry(&mut r, &b.comult).0,
                2 => b.unit = mutate_entry(&mut r, &b.unit).0,
                _ => b.counit = mutate_entry(&mut r, &b.counit).0,
            }
            b
        };
        candidates.push((format!("random #{}", candidates.len()), candidate));
    }
    let (mut passing, mut failing) = (0, 0);
    for (name, b) in &candidates {
        let oracle = is_bialgebra(b);
        let verdict = from_bialgebra(b);
        ensure(verdict.passes() == oracle, || {
            format!("{name}: oracle says {oracle}, axioms say {:?}", verdict.report.first_failure())
        })?;
        if oracle {
            passing += 1;
        } else {
            failing += 1;
        }
    }
    for name in ["Q[C2]", "Q[C3]", "Q[S3]"] {
        let b = &candidates.iter().find(|(n, _)| n == name).unwrap().1;
        ensure(from_bialgebra(b).passes(), || format!("{name} should pass"))?;
    }
    ensure(!from_bialgebra(&candidates[3].1).passes(), || "the matrix non-example passed".into())?;
    within(start, Duration::from_secs(30))?;
    Ok(format!(
        "{} candidates agree ({passing} bialgebras, {failing} not) in {:.1?}",
        candidates.len(),
        start.elapsed()
    ))
}

fn mutation_round<B: Backend<Payload = ExactMatrix>>(
    name: &str,
    q: &QuantumCategory<B>,
    rounds: usize,
    r: &mut impl Rng,
) -> Result<(), String> {
    ensure(check_axioms(q).passes(), || format!("{name} does not pass to begin with"))?;
    for k in 0..rounds {
        let mutant = if k % 2 == 0 {
            q.with_structure(mutate_morphism(r, q.nu2()), q.nu0().clone())
        } else {
            q.with_structure(q.nu2().clone(), mutate_morphism(r, q.nu0()))
        }
        .map_err(|e| e.to_string())?;
        let report = check_axioms(&mutant);
        let failures = report.failures();
        ensure(!report.passes() && !failures.is_empty(), || format!("{name}: mutation {k} went unnoticed"))?;
        ensure(failures.iter().all(|f| !f.witness.label.is_empty()), || format!("{name}: failure without witness"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut r = rng(3);
    let rounds = 20;
    let mut fixtures = 0;
    for cat in [
        FinCat::terminal(),
        FinCat::walking_arrow(),
        FinCat::cyclic_group(2),
        FinCat::cyclic_group(3),
        FinCat::walking_arrow().product(&FinCat::walking_arrow()),
    ] {
        let q = from_small_category::<FdVect>(&cat).map_err(|e| e.to_string())?;
        mutation_round(&format!("{:?}", cat.morphisms), &q, rounds, &mut r)?;
        fixtures += 1;
    }
    let c2 = FinCat::cyclic_group(2);
    let bialgebras = [
        ("Q[C2]", group_algebra(&c2)),
        ("Q[C3]", group_algebra(&FinCat::cyclic_group(3))),
        ("Q[S3]", group_algebra(&FinCat::symmetric_group_3())),
        ("functions on C2", function_algebra(&c2)),
        (
            "Hopf C2",
            from_hopf_group_coalgebra(&HopfGroupCoalgebraData::trivial(&["e", "g"], &monoid_table(&c2)))
                .unwrap()
                .bialgebra,
        ),
    ];
    for (name, b) in &bialgebras {
        let q = bialgebra_category(b).map_err(|e| e.to_string())?;
        mutation_round(name, &q, rounds, &mut r)?;
        fixtures += 1;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{fixtures} fixtures x {rounds} mutations all rejected with witnesses in {:.1?}", start.elapsed()))
}

fn transport_comonoid(c: &Comonoid<FdVect>, p: &ExactMatrix) -> Comonoid<FdVect> {
    let n = p.rows();
    let inverse = p.factor_through_mono(&ExactMatrix::identity(n)).unwrap();
    let x = c.carrier();
    Comonoid::new(
        Morphism::new(x.clone(), x.tensor(x), inverse.kron(&inverse).mul(c.delta().payload()).mul(p)).unwrap(),
        Morphism::new(x.clone(), Object::unit(), c.epsilon().payload().mul(p)).unwrap(),
    )
    .unwrap()
}

fn atoms(prefix: &str, n: usize) -> Object {
    let names: Vec<String> = (0..n).map(|k| format!("{prefix}{k}")).collect();
    Object::from_atoms(&names).unwrap()
}

fn random_function(r: &mut impl Rng, n: usize, m: usize) -> Vec<usize> {
    (0..n).map(|_| r.gen_range(0..m)).collect()
}

/// A comonoid of dimension at most 3 together with a change of basis away
/// from the group-like one, or the triangular coalgebra.
fn random_comonoid(r: &mut impl Rng) -> (Comonoid<FdVect>, ExactMatrix) {
    if r.gen_bool(0.2) {
        let t = triangular_coalgebra(2);
        return (t, ExactMatrix::identity(3));
    }
    let n = r.gen_range(1..=3);
    let p = random_invertible(r, n);
    (transport_comonoid(&Comonoid::diagonal(&atoms("c", n)), &p), p)
}

fn check_star<B: Backend>(f: &ComonoidMap<B>) -> Result<(), String> {
    let adj = star_adjunction(f).map_err(|e| e.to_string())?;
    adj.check_triangles().map_err(|e| e.to_string())?;
    let (upper, lower) = (&adj.upper, &adj.lower);
    for (m, n, l) in [(upper, lower, upper), (lower, upper, lower)] {
        associator(m, n, l).map_err(|e| format!("associator: {e}"))?;
    }
    for m in [upper, lower] {
        left_unitor(m).map_err(|e| format!("left unitor: {e}"))?;
        right_unitor(m).map_err(|e| format!("right unitor: {e}"))?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut r = rng(4);
    // adjunctions, associators and unitors along random comonoid maps
    let mut maps = 0;
    for _ in 0..15 {
        let (n, m) = (r.gen_range(1..=3), r.gen_range(1..=3));
        let table = random_function(&mut r, n, m);
        let (x, y) = (atoms("x", n), atoms("y", m));
        let f = ComonoidMap::new(
            Comonoid::<FinSet>::diagonal(&x),
            Comonoid::diagonal(&y),
            function(&x, &y, &table).unwrap(),
        )
        .map_err(|e| e.to_string())?;
        check_star(&f)?;
        let (p, q) = (random_invertible(&mut r, n), random_invertible(&mut r, m));
        let source = transport_comonoid(&Comonoid::diagonal(&x), &p);
        let target = transport_comonoid(&Comonoid::diagonal(&y), &q);
        let q_inverse = q.factor_through_mono(&ExactMatrix::identity(m)).unwrap();
        let lin = function::<FdVect>(&x, &y, &table).unwrap();
        let moved = Morphism::new(x.clone(), y.clone(), q_inverse.mul(lin.payload()).mul(&p)).unwrap();
        check_star(&ComonoidMap::new(source, target, moved).map_err(|e| e.to_string())?)?;
        maps += 2;
    }
    let t = triangular_coalgebra(2);
    check_star(&ComonoidMap::new(t.clone(), Comonoid::unit(), t.epsilon().clone()).map_err(|e| e.to_string())?)?;
    check_star(&ComonoidMap::identity(&t))?;
    maps += 2;

    // cofree round trips: maps into e ⊗ N
    let mut round_trips = 0;
    for _ in 0..60 {
        let (c, _) = random_comonoid(&mut r);
        let e = bidual_counit(&c).map_err(|e| e.to_string())?;
        let k = r.gen_range(1..=3);
        let n = Comodule::trivial(&atoms("n", k));
        let dim = c.carrier().dim();
        let generic = Morphism::new(c.carrier().clone(), n.carrier().clone(), random_matrix(&mut r, k, dim)).unwrap();
        let lift = Morphism::identity(c.carrier()).tensor(&generic);
        let flipped = c.delta().then(&qcat_core::context::braiding(c.carrier(), c.carrier())).unwrap();
        let condition = c.delta().then(&lift).unwrap() == flipped.then(&lift).unwrap();
        ensure(extend(&c, &e, &n, &generic).is_ok() == condition, || "side condition misjudged".into())?;
        // maps through the counit always satisfy it
        let alpha = if condition {
            generic
        } else {
            Morphism::new(
                c.carrier().clone(),
                n.carrier().clone(),
                random_matrix(&mut r, k, 1).mul(c.epsilon().payload()),
            )
            .unwrap()
        };
        let beta = extend(&c, &e, &n, &alpha).map_err(|e| format!("extend: {e}"))?;
        ensure(corestrict(&c, &n, &beta).map_err(|e| e.to_string())? == alpha, || "corestrict after extend".into())?;
        let again = extend(&c, &e, &n, &corestrict(&c, &n, &beta).unwrap()).map_err(|e| e.to_string())?;
        ensure(again == beta, || "extend after corestrict".into())?;
        round_trips += 1;
    }
    // maps into n ⊗ N along the unit
    for _ in 0..60 {
        let size = r.gen_range(1..=3);
        let c = Comonoid::<FdVect>::diagonal(&atoms("c", size));
        let m = bidual_unit(&c).map_err(|e| e.to_string())?;
        let base = c.opposite().tensor(&c);
        let n = identity_comodule(&base);
        let mut scaling = ExactMatrix::zeros(size * size, size * size);
        for i in 0..size * size {
            scaling.set(i, i, nonzero_rational(&mut r));
        }
        let alpha =
            c.delta().then(&Morphism::new(base.carrier().clone(), base.carrier().clone(), scaling).unwrap()).unwrap();
        let (beta, target) = extend_along_unit(&c, &m, &n, &alpha).map_err(|e| format!("extend along unit: {e}"))?;
        ensure(corestrict_along_unit(&c, &target, &beta).map_err(|e| e.to_string())? == alpha, || {
            "corestrict along unit after extend".into()
        })?;
        let alpha_again = corestrict_along_unit(&c, &target, &beta).unwrap();
        let (beta_again, _) = extend_along_unit(&c, &m, &n, &alpha_again).map_err(|e| e.to_string())?;
        ensure(beta_again == beta, || "extend along unit after corestrict".into())?;
        round_trips += 1;
    }

    // tensoring with an object preserves coreflexive equalizers
    let mut equalizers = 0;
    for _ in 0..30 {
        let (nx, nw, nz) = (r.gen_range(1..=3), r.gen_range(1..=3), r.gen_range(1..=3));
        let x = atoms("x", nx);
        let w = atoms("w", nw);
        let z = atoms("z", nz);
        let y = Object::from_atoms(&x.labels().iter().chain(&w.labels()).map(ToString::to_string).collect::<Vec<_>>())
            .unwrap();
        let stacked = |lower: &ExactMatrix| {
            ExactMatrix::from_triples(
                nx + nw,
                nx,
                (0..nx).map(|i| (i, i, rat(1))).chain(
                    (0..nx).flat_map(|c| lower.column_entries(c).iter().map(move |(r, v)| (nx + r, c, v.clone()))),
                ),
            )
        };
        let f = Morphism::<FdVect>::new(x.clone(), y.clone(), stacked(&random_matrix(&mut r, nw, nx))).unwrap();
        let g = Morphism::<FdVect>::new(x.clone(), y.clone(), stacked(&random_matrix(&mut r, nw, nx))).unwrap();
        let retraction = Morphism::<FdVect>::new(
            y.clone(),
            x.clone(),
            ExactMatrix::from_triples(nx, nx + nw, (0..nx).map(|i| (i, i, rat(1)))),
        )
        .unwrap();
        let base = coreflexive_equalizer_checked(&f, &g, &retraction).map_err(|e| e.to_string())?;
        let one = Morphism::<FdVect>::identity(&z);
        let right = coreflexive_equalizer_checked(&f.tensor(&one), &g.tensor(&one), &retraction.tensor(&one))
            .map_err(|e| e.to_string())?;
        ensure(right.inclusion == base.inclusion.tensor(&one), || "E ⊗ Z is not the equalizer".into())?;
        let left = coreflexive_equalizer(&one.tensor(&f), &one.tensor(&g)).map_err(|e| e.to_string())?;
        ensure(left.inclusion == one.tensor(&base.inclusion), || "Z ⊗ E is not the equalizer".into())?;
        equalizers += 1;

        let sx = atoms("s", nx);
        let sy = atoms("t", nx + nw);
        let shift: Vec<usize> = (0..nx).collect();
        let other: Vec<usize> = (0..nx).map(|i| if r.gen_bool(0.5) { i } else { nx + r.gen_range(0..nw) }).collect();
        let f = function::<FinSet>(&sx, &sy, &shift).unwrap();
        let g = function::<FinSet>(&sx, &sy, &other).unwrap();
        let back: Vec<usize> =
            (0..nx + nw).map(|j| if j < nx { j } else { other.iter().position(|&o| o == j).unwrap_or(0) }).collect();
        let retraction = function::<FinSet>(&sy, &sx, &back).unwrap();
        let Ok(base) = coreflexive_equalizer_checked(&f, &g, &retraction) else { continue };
        let one = Morphism::<FinSet>::identity(&z);
        let right = coreflexive_equalizer(&f.tensor(&one), &g.tensor(&one)).map_err(|e| e.to_string())?;
        ensure(right.inclusion == base.inclusion.tensor(&one), || "E × Z is not the equalizer".into())?;
        equalizers += 1;
    }
    Ok(format!(
        "{maps} adjunctions with associators and unitors, {round_trips} cofree round trips, {equalizers} equalizers in {:.1?}",
        start.elapsed()
    ))
}

fn lift_all<B: FromFunction>(cats: &[FinCat]) -> Result<Vec<QuantumCategory<B>>, String> {
    cats.iter().map(|c| from_small_category::<B>(c).map_err(|e| e.to_string())).collect()
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let cats = corpus();
    let qs = lift_all::<FinSet>(&cats)?;
    let mut candidates = 0usize;
    let mut accepted = 0usize;
    for (c, qc) in cats.iter().zip(&qs) {
        for (d, qd) in cats.iter().zip(&qs) {
            let ordinary = all_functors(c, d);
            let (no, nm) = (d.object_count(), d.morphism_count());
            let object_maps = all_tables(c.object_count(), no);
            let arrow_maps = all_tables(c.morphism_count(), nm);
            for objects in &object_maps {
                let f = function::<FinSet>(qc.c().carrier(), qd.c().carrier(), objects).unwrap();
                for arrows in &arrow_maps {
                    let phi = function::<FinSet>(qc.a().carrier(), qd.a().carrier(), arrows).unwrap();
                    let candidate = QuantumFunctor { source: qc.clone(), target: qd.clone(), f: f.clone(), phi };
                    let quantum = validate_functor(&candidate).passes();
                    let classical = ordinary.iter().any(|g| &g.objects == objects && &g.morphisms == arrows);
                    ensure(quantum == classical, || {
                        format!(
                            "{:?} -> {:?} at {objects:?}, {arrows:?}: quantum {quantum}, classical {classical}",
                            c.morphisms, d.morphisms
                        )
                    })?;
                    candidates += 1;
                    accepted += usize::from(quantum);
                }
            }
        }
    }

    // category laws on random composable triples of lifted functors
    let mut r = rng(5);
    let mut laws = 0;
    while laws < 200 {
        let pick = |r: &mut rand_chacha::ChaCha8Rng| r.gen_range(0..cats.len());
        let (a, b, c, d) = (pick(&mut r), pick(&mut r), pick(&mut r), pick(&mut r));
        let (Some(f), Some(g), Some(h)) = (
            all_functors(&cats[a], &cats[b]).choose(&mut r).cloned(),
            all_functors(&cats[b], &cats[c]).choose(&mut r).cloned(),
            all_functors(&cats[c], &cats[d]).choose(&mut r).cloned(),
        ) else {
            continue;
        };
        let lift = |x: &FinFunctor, s: usize, t: usize| x.lift_between(&qs[s], &qs[t]).map_err(|e| e.to_string());
        let (qf, qg, qh) = (lift(&f, a, b)?, lift(&g, b, c)?, lift(&h, c, d)?);
        let compose =
            |x: &QuantumFunctor<FinSet>, y: &QuantumFunctor<FinSet>| compose_functors(x, y).map_err(|e| e.to_string());
        let left = compose(&compose(&qf, &qg)?, &qh)?;
        let right = compose(&qf, &compose(&qg, &qh)?)?;
        ensure(left == right, || "composition is not associative".into())?;
        let ordinary = f.then(&g).and_then(|fg| fg.then(&h)).map_err(|e| e.to_string())?;
        ensure(left == lift(&ordinary, a, d)?, || "composite differs from the lifted ordinary composite".into())?;
        ensure(validate_functor(&left).passes(), || "composite fails validation".into())?;
        ensure(compose(&identity_functor(&qs[a]), &qf)? == qf, || "left identity".into())?;
        ensure(compose(&qf, &identity_functor(&qs[b]))? == qf, || "right identity".into())?;
        laws += 1;
    }
    let two = FinCat::walking_arrow();
    let endo: Vec<FinFunctor> = all_functors(&two, &two);

    // a nonidentity natural transformation and a rejected mutant
    let constant = endo.iter().find(|f| f.objects == [0, 0]).unwrap();
    let identity = FinFunctor::identity(&two);
    let alpha = all_naturals(constant, &identity).pop().ok_or("no natural transformation")?;
    let lifted_alpha = alpha.lift::<FinSet>().map_err(|e| e.to_string())?;
    ensure(lifted_alpha.tau != lifted_alpha.source.phi, || "expected a nonidentity transformation".into())?;
    ensure(validate_nat_transformation(&lifted_alpha).passes(), || "natural transformation rejected".into())?;
    let mut mutant = lifted_alpha.clone();
    let mut table = mutant.tau.payload().0.clone();
    table.swap(0, 2);
    mutant.tau =
        Morphism::new(mutant.tau.source().clone(), mutant.tau.target().clone(), qcat_core::context::Table(table))
            .unwrap();
    let report = validate_nat_transformation(&mutant);
    ensure(!report.passes() && !report.failures().is_empty(), || "swapped components accepted".into())?;

    Ok(format!(
        "{candidates} candidate functors over {} pairs ({accepted} accepted, matching ordinary functors), {laws} composable triples satisfy the category laws, natural transformation validated and mutant rejected in {:.1?}",
        cats.len() * cats.len(),
        start.elapsed()
    ))
}

fn all_tables(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|t| (0..m).map(move |y| [t.clone(), vec![y]].concat())).collect();
    }
    out
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let c2 = FinCat::cyclic_group(2);
    let data = HopfGroupCoalgebraData::trivial(&["e", "g"], &monoid_table(&c2));
    let out = from_hopf_group_coalgebra(&data).map_err(|e| e.to_string())?;
    ensure(out.verdict.passes(), || format!("{:?}", out.verdict.report.first_failure()))?;
    ensure(out.group.object_count() == 1 && out.group.morphism_count() == 2, || "group has the wrong size".into())?;
    ensure(out.group.canonical_form() == c2.canonical_form(), || "group is not C2".into())?;
    let dual = function_algebra(&c2);
    ensure(out.bialgebra.mult == dual.mult && out.bialgebra.comult == dual.comult, || {
        "not the dual group algebra".into()
    })?;
    within(start, Duration::from_secs(5))?;
    Ok(format!("passes all axioms, group C2, in {:.1?}", start.elapsed()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 6] = [
        ("1 small categories round trip", criterion_1),
        ("2 bialgebra oracle agreement", criterion_2),
        ("3 mutation sensitivity", criterion_3),
        ("4 comodule infrastructure laws", criterion_4),
        ("5 functors and natural transformations", criterion_5),
        ("6 Hopf group coalgebra", criterion_6),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(detail) => {
                println!("criterion {name}: FAIL ({detail})");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
