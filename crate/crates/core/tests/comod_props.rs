mod common;

use num_traits::One;
use proptest::prelude::*;
use qcat_core::comod::{associator, left_unitor, right_unitor, Comodule, Comonoid};
use qcat_core::context::{FdVect, Morphism, Object};
use qcat_core::linalg::ExactMatrix;
use rand::Rng;

fn object(prefix: &str, n: usize) -> Object {
    let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
    Object::from_atoms(&names).unwrap()
}

fn inverse(p: &ExactMatrix) -> ExactMatrix {
    p.factor_through_mono(&ExactMatrix::identity(p.rows())).unwrap()
}

fn eye(n: usize) -> ExactMatrix {
    ExactMatrix::identity(n)
}

/// Raw comultiplication and counit of a coalgebra.
#[derive(Debug, Clone)]
struct Coalgebra {
    delta: ExactMatrix,
    epsilon: ExactMatrix,
}

impl Coalgebra {
    fn dim(&self) -> usize {
        self.epsilon.cols()
    }

    fn grouplike(n: usize) -> Self {
        Coalgebra {
            delta: ExactMatrix::from_triples(n * n, n, (0..n).map(|i| (i * n + i, i, One::one()))),
            epsilon: ExactMatrix::from_triples(1, n, (0..n).map(|i| (0, i, One::one()))),
        }
    }

    /// Dual of the `k × k` matrix algebra: `e_ij ↦ Σ_l e_il ⊗ e_lj`.
    fn matrix(k: usize) -> Self {
        let n = k * k;
        let delta = (0..k)
            .flat_map(|i| (0..k).flat_map(move |j| (0..k).map(move |l| (i, j, l))))
            .map(|(i, j, l)| ((i * k + l) * n + l * k + j, i * k + j, One::one()));
        Coalgebra {
            delta: ExactMatrix::from_triples(n * n, n, delta),
            epsilon: ExactMatrix::from_triples(1, n, (0..k).map(|i| (0, i * k + i, One::one()))),
        }
    }

    fn transport(&self, p: &ExactMatrix) -> Self {
        let q = inverse(p);
        Coalgebra { delta: p.kron(p).mul(&self.delta).mul(&q), epsilon: self.epsilon.mul(&q) }
    }

    fn is_valid(&self) -> bool {
        let (d, e, one) = (&self.delta, &self.epsilon, eye(self.dim()));
        d.kron(&one).mul(d) == one.kron(d).mul(d) && e.kron(&one).mul(d) == one && one.kron(e).mul(d) == one
    }

    fn comonoid(&self, prefix: &str) -> Comonoid<FdVect> {
        let x = object(prefix, self.dim());
        let delta = Morphism::new(x.clone(), x.tensor(&x), self.delta.clone()).unwrap();
        let epsilon = Morphism::new(x, Object::unit(), self.epsilon.clone()).unwrap();
        Comonoid::new_unchecked(delta, epsilon)
    }
}

fn is_comodule(c: &Coalgebra, d: &Coalgebra, a: &ExactMatrix) -> bool {
    let one = eye(a.cols());
    let counit = c.epsilon.kron(&one).kron(&d.epsilon).mul(a);
    let outer = c.delta.kron(&one).kron(&d.delta).mul(a);
    let inner = eye(c.dim()).kron(a).kron(&eye(d.dim())).mul(a);
    counit == one && outer == inner
}

/// Basis vectors with a left and a right degree, re-expressed through `frame`.
fn graded_coaction(rng: &mut impl Rng, left: usize, right: usize, m: usize) -> ExactMatrix {
    let entries = (0..m).map(|j| ((rng.gen_range(0..left) * m + j) * right + rng.gen_range(0..right), j, One::one()));
    let a = ExactMatrix::from_triples(left * m * right, m, entries.collect::<Vec<_>>());
    let q = common::random_invertible(rng, m);
    eye(left).kron(&q).kron(&eye(right)).mul(&a).mul(&inverse(&q))
}

fn comodule(left: &Comonoid<FdVect>, right: &Comonoid<FdVect>, a: &ExactMatrix, prefix: &str) -> Comodule<FdVect> {
    let m = object(prefix, a.cols());
    let target = Object::tensor_all(&[left.carrier(), &m, right.carrier()]);
    Comodule::new_unchecked(left.clone(), right.clone(), Morphism::new(m, target, a.clone()).unwrap())
}

fn coalgebra(rng: &mut impl Rng) -> Coalgebra {
    let base = if rng.gen_bool(0.3) { Coalgebra::matrix(2) } else { Coalgebra::grouplike(rng.gen_range(1..=3)) };
    let p = common::random_invertible(rng, base.dim());
    base.transport(&p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn constructed_comonoids_pass_and_mutants_match_the_oracle(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = coalgebra(&mut rng);
        prop_assert!(c.is_valid());
        prop_assert!(c.comonoid("c").validate().is_ok());

        let (delta, _, _) = common::mutate_entry(&mut rng, &c.delta);
        let mutant = Coalgebra { delta, ..c.clone() };
        prop_assert_eq!(mutant.comonoid("c").validate().is_ok(), mutant.is_valid());
        let (epsilon, _, _) = common::mutate_entry(&mut rng, &c.epsilon);
        let mutant = Coalgebra { epsilon, ..c };
        prop_assert!(!mutant.is_valid());
        prop_assert!(mutant.comonoid("c").validate().is_err());
    }

    #[test]
    fn grouplike_comultiplication_mutants_are_rejected(n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = Coalgebra::grouplike(n);
        let (delta, _, _) = common::mutate_entry(&mut rng, &c.delta);
        let mutant = Coalgebra { delta, ..c };
        prop_assert!(!mutant.is_valid());
        prop_assert!(mutant.comonoid("g").validate().is_err());
    }

    #[test]
    fn constructed_comodules_pass_and_mutants_match_the_oracle(seed in any::<u64>(), m in 1usize..=3) {
        let mut rng = common::rng(seed);
        let (c, d) = (Coalgebra::grouplike(rng.gen_range(1..=3)), Coalgebra::grouplike(rng.gen_range(1..=2)));
        let a = graded_coaction(&mut rng, c.dim(), d.dim(), m);
        let (left, right) = (c.comonoid("c"), d.comonoid("d"));
        prop_assert!(is_comodule(&c, &d, &a));
        prop_assert!(comodule(&left, &right, &a, "m").validate().is_ok());

        let (mutated, _, _) = common::mutate_entry(&mut rng, &a);
        let verdict = comodule(&left, &right, &mutated, "m").validate();
        prop_assert_eq!(verdict.is_ok(), is_comodule(&c, &d, &mutated));
        prop_assert!(verdict.is_err());
    }

    #[test]
    fn identity_comodules_of_transported_coalgebras_are_valid(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = coalgebra(&mut rng);
        let delta3 = c.delta.kron(&eye(c.dim())).mul(&c.delta);
        prop_assert!(is_comodule(&c, &c, &delta3));
        let comonoid = c.comonoid("c");
        prop_assert!(comodule(&comonoid, &comonoid, &delta3, "m").validate().is_ok());
    }

    #[test]
    fn unitors_are_invertible_on_graded_comodules(seed in any::<u64>(), m in 1usize..=3) {
        let mut rng = common::rng(seed);
        let (c, d) = (Coalgebra::grouplike(rng.gen_range(1..=3)), Coalgebra::grouplike(rng.gen_range(1..=3)));
        let a = graded_coaction(&mut rng, c.dim(), d.dim(), m);
        let module = comodule(&c.comonoid("c"), &d.comonoid("d"), &a, "m");
        for unitor in [left_unitor(&module).unwrap(), right_unitor(&module).unwrap()] {
            prop_assert_eq!(unitor.cotensor.carrier().dim(), m);
            prop_assert_eq!(
                unitor.forward.map().then(unitor.inverse.map()).unwrap(),
                Morphism::identity(unitor.forward.source().carrier())
            );
            prop_assert_eq!(unitor.inverse.map().then(unitor.forward.map()).unwrap(), Morphism::identity(module.carrier()));
        }
    }

    #[test]
    fn associator_is_invertible_on_graded_comodules(seed in any::<u64>(), dims in proptest::array::uniform3(1usize..=2)) {
        let mut rng = common::rng(seed);
        let gs: Vec<Coalgebra> = (0..4).map(|_| Coalgebra::grouplike(rng.gen_range(1..=2))).collect();
        let comonoids: Vec<Comonoid<FdVect>> = gs.iter().enumerate().map(|(i, g)| g.comonoid(&format!("c{i}_"))).collect();
        let modules: Vec<Comodule<FdVect>> = (0..3)
            .map(|i| {
                let a = graded_coaction(&mut rng, gs[i].dim(), gs[i + 1].dim(), dims[i]);
                comodule(&comonoids[i], &comonoids[i + 1], &a, &format!("m{i}_"))
            })
            .collect();
        let assoc = associator(&modules[0], &modules[1], &modules[2]).unwrap();
        let there = assoc.forward.map();
        let back = assoc.backward.map();
        prop_assert_eq!(there.then(back).unwrap(), Morphism::identity(there.source()));
        prop_assert_eq!(back.then(there).unwrap(), Morphism::identity(back.source()));
        prop_assert_eq!(there.then(&assoc.right_inclusion()).unwrap(), assoc.left_inclusion());
    }
}
