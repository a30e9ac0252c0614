#![allow(dead_code)]

use num_traits::{One, Zero};
use qcat_core::comod::Comonoid;
use qcat_core::constructors::{categories_with_homs, Bialgebra, FinCat};
use qcat_core::context::{function, function_table, Backend, FromFunction, Morphism, Object};
use qcat_core::linalg::{ratio, ExactMatrix, Rational};
use qcat_core::quantum::{composable_pairs, QuantumCategory, QuantumGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Rational {
    let numer = *[-3i64, -2, -1, 1, 2, 3, 5].choose(rng).unwrap();
    let denom = *[1i64, 1, 1, 2, 3].choose(rng).unwrap();
    ratio(numer, denom)
}

/// A random category on `objects` objects with at most `max_morphisms`
/// morphisms, drawn among all composition tables for a random hom-set shape.
pub fn random_category(rng: &mut impl Rng, objects: usize, max_morphisms: usize) -> FinCat {
    loop {
        let extra = rng.gen_range(0..=max_morphisms - objects);
        let mut hom = vec![vec![0; objects]; objects];
        for _ in 0..extra {
            hom[rng.gen_range(0..objects)][rng.gen_range(0..objects)] += 1;
        }
        let cats = categories_with_homs(&hom);
        if let Some(cat) = cats.choose(rng) {
            return cat.clone();
        }
    }
}

/// `L U` with unit lower triangular `L` and upper triangular `U` with nonzero diagonal.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> ExactMatrix {
    let mut lower = ExactMatrix::identity(n);
    let mut upper = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i > j && rng.gen_bool(0.5) {
                lower.set(i, j, nonzero_rational(rng));
            }
            if i == j || (i < j && rng.gen_bool(0.5)) {
                upper.set(i, j, nonzero_rational(rng));
            }
        }
    }
    lower.mul(&upper)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            if rng.gen_bool(0.6) {
                m.set(r, c, nonzero_rational(rng));
            }
        }
    }
    m
}

/// Adds a nonzero amount to one entry.
pub fn mutate_entry(rng: &mut impl Rng, m: &ExactMatrix) -> (ExactMatrix, usize, usize) {
    let (r, c) = (rng.gen_range(0..m.rows()), rng.gen_range(0..m.cols()));
    let mut out = m.clone();
    out.set(r, c, m.get(r, c) + nonzero_rational(rng));
    (out, r, c)
}

pub fn mutate_morphism<B: Backend<Payload = ExactMatrix>>(rng: &mut impl Rng, m: &Morphism<B>) -> Morphism<B> {
    let (payload, _, _) = mutate_entry(rng, m.payload());
    Morphism::new(m.source().clone(), m.target().clone(), payload).unwrap()
}

/// `table[a][b] = a·b` for a one-object category, read with "a then b" as `b·a`.
pub fn monoid_table(cat: &FinCat) -> Vec<Vec<usize>> {
    let n = cat.morphism_count();
    (0..n).map(|a| (0..n).map(|b| cat.compose(b, a).unwrap()).collect()).collect()
}

pub fn names(cat: &FinCat) -> Vec<&str> {
    cat.morphisms.iter().map(String::as_str).collect()
}

pub fn group_algebra(cat: &FinCat) -> Bialgebra {
    Bialgebra::monoid_algebra(&names(cat), &monoid_table(cat)).unwrap()
}

pub fn function_algebra(cat: &FinCat) -> Bialgebra {
    Bialgebra::function_algebra(&names(cat), &monoid_table(cat)).unwrap()
}

/// Structure constants as dense nested vectors, indexed `[output][inputs]`.
struct Constants {
    n: usize,
    mult: Vec<Vec<Vec<Rational>>>,
    unit: Vec<Rational>,
    comult: Vec<Vec<Vec<Rational>>>,
    counit: Vec<Rational>,
}

impl Constants {
    fn of(b: &Bialgebra) -> Self {
        let n = b.dim();
        Constants {
            n,
            mult: (0..n)
                .map(|k| (0..n).map(|i| (0..n).map(|j| b.mult.get(k, i * n + j).clone()).collect()).collect())
                .collect(),
            unit: (0..n).map(|k| b.unit.get(k, 0).clone()).collect(),
            comult: (0..n)
                .map(|i| (0..n).map(|j| (0..n).map(|k| b.comult.get(i * n + j, k).clone()).collect()).collect())
                .collect(),
            counit: (0..n).map(|k| b.counit.get(0, k).clone()).collect(),
        }
    }
}

/// Checks the bialgebra laws one basis element at a time from the structure
/// constants `m^k_{ij}`, `η^k`, `Δ^{ij}_k`, `ε_k`.
pub fn is_bialgebra(b: &Bialgebra) -> bool {
    let c = Constants::of(b);
    let n = c.n;
    let range = || 0..n;
    let kron = |i: usize, j: usize| if i == j { Rational::one() } else { Rational::zero() };
    // (e_i e_j) e_k = e_i (e_j e_k)
    for i in range() {
        for j in range() {
            for k in range() {
                for p in range() {
                    let left: Rational = range().map(|l| &c.mult[l][i][j] * &c.mult[p][l][k]).sum();
                    let right: Rational = range().map(|l| &c.mult[l][j][k] * &c.mult[p][i][l]).sum();
                    if left != right {
                        return false;
                    }
                }
            }
        }
    }
    for i in range() {
        for p in range() {
            let left: Rational = range().map(|u| &c.unit[u] * &c.mult[p][u][i]).sum();
            let right: Rational = range().map(|u| &c.unit[u] * &c.mult[p][i][u]).sum();
            if left != kron(i, p) || right != kron(i, p) {
                return false;
            }
        }
    }
    // Δ coassociative and counital
    for k in range() {
        for a in range() {
            for b2 in range() {
                for d in range() {
                    let left: Rational = range().map(|l| &c.comult[l][d][k] * &c.comult[a][b2][l]).sum();
                    let right: Rational = range().map(|l| &c.comult[a][l][k] * &c.comult[b2][d][l]).sum();
                    if left != right {
                        return false;
                    }
                }
            }
        }
        for a in range() {
            let left: Rational = range().map(|l| &c.counit[l] * &c.comult[l][a][k]).sum();
            let right: Rational = range().map(|l| &c.counit[l] * &c.comult[a][l][k]).sum();
            if left != kron(a, k) || right != kron(a, k) {
                return false;
            }
        }
    }
    // Δ(e_i e_j) = Δ(e_i) Δ(e_j)
    let nonzero = |v: &Vec<Vec<Rational>>| {
        let mut out = Vec::new();
        for (x, row) in v.iter().enumerate() {
            for (y, value) in row.iter().enumerate() {
                if !value.is_zero() {
                    out.push((x, y, value.clone()));
                }
            }
        }
        out
    };
    let delta_of: Vec<Vec<(usize, usize, Rational)>> = range()
        .map(|k| nonzero(&range().map(|x| range().map(|y| c.comult[x][y][k].clone()).collect()).collect()))
        .collect();
    for i in range() {
        for j in range() {
            let mut left = vec![vec![Rational::zero(); n]; n];
            for l in range() {
                for (x, y, v) in &delta_of[l] {
                    left[*x][*y] += &c.mult[l][i][j] * v;
                }
            }
            let mut right = vec![vec![Rational::zero(); n]; n];
            for (a1, a2, u) in &delta_of[i] {
                for (b1, b2, v) in &delta_of[j] {
                    let coefficient = u * v;
                    for x in range() {
                        for y in range() {
                            right[x][y] += &coefficient * &c.mult[x][*a1][*b1] * &c.mult[y][*a2][*b2];
                        }
                    }
                }
            }
            if left != right {
                return false;
            }
            let counit_left: Rational = range().map(|l| &c.mult[l][i][j] * &c.counit[l]).sum();
            if counit_left != &c.counit[i] * &c.counit[j] {
                return false;
            }
        }
    }
    let delta_unit: Vec<Vec<Rational>> =
        range().map(|x| range().map(|y| range().map(|l| &c.unit[l] * &c.comult[x][y][l]).sum()).collect()).collect();
    let unit_unit: Vec<Vec<Rational>> = range().map(|x| range().map(|y| &c.unit[x] * &c.unit[y]).collect()).collect();
    let counit_unit: Rational = range().map(|l| &c.unit[l] * &c.counit[l]).sum();
    delta_unit == unit_unit && counit_unit.is_one()
}

/// Small rationals, zero about a third of the time.
pub fn rational_strategy() -> impl proptest::strategy::Strategy<Value = Rational> {
    use proptest::prelude::*;
    prop_oneof![Just(Rational::zero()), (-4i64..=4, 1i64..=3).prop_map(|(n, d)| ratio(n, d))]
}

pub fn matrix_strategy(rows: usize, cols: usize) -> impl proptest::strategy::Strategy<Value = ExactMatrix> {
    use proptest::prelude::*;
    proptest::collection::vec(rational_strategy(), rows * cols)
        .prop_map(move |entries| ExactMatrix::from_entries(rows, cols, entries).unwrap())
}

/// A matrix whose shape is drawn from `1..=max` in each direction.
pub fn any_matrix(max: usize) -> impl proptest::strategy::Strategy<Value = ExactMatrix> {
    use proptest::prelude::*;
    (1..=max, 1..=max).prop_flat_map(|(r, c)| matrix_strategy(r, c))
}

/// The quantum category read off `cat` without asking whether `cat` is a category.
pub fn raw_category<B: FromFunction>(cat: &FinCat) -> QuantumCategory<B> {
    let objects = Object::from_atoms(&cat.objects).unwrap();
    let arrows = Object::from_atoms(&cat.morphisms).unwrap();
    let graph = QuantumGraph::new(
        Comonoid::diagonal(&objects),
        Comonoid::diagonal(&arrows),
        function(&arrows, &objects, &cat.dom).unwrap(),
        function(&arrows, &objects, &cat.cod).unwrap(),
    )
    .unwrap();
    let pairs = composable_pairs(&graph).unwrap();
    let n = cat.morphism_count();
    let composites: Vec<usize> =
        function_table(pairs.inclusion()).unwrap().into_iter().map(|xy| cat.comp[&(xy / n, xy % n)]).collect();
    let nu2 = function(pairs.h().carrier(), &arrows, &composites).unwrap();
    let nu0 = function(&objects, &arrows, &cat.ids).unwrap();
    QuantumCategory::from_pairs(graph, pairs, nu2, nu0).unwrap()
}

/// Redirects one composite, and sometimes one identity, to another morphism.
pub fn mutate_table(rng: &mut impl Rng, cat: &FinCat) -> FinCat {
    let mut out = cat.clone();
    let n = cat.morphism_count();
    if n < 2 {
        return out;
    }
    let pairs: Vec<(usize, usize)> = cat.comp.keys().copied().collect();
    let pair = *pairs.choose(rng).unwrap();
    let current = cat.comp[&pair];
    out.comp.insert(pair, (current + rng.gen_range(1..n)) % n);
    if rng.gen_bool(0.2) {
        let o = rng.gen_range(0..cat.object_count());
        out.ids[o] = rng.gen_range(0..n);
    }
    out
}
