//! Small standard structures used as fixtures and in documentation.

use crate::comod::{Comodule, Comonoid};
use crate::context::{FdVect, FromFunction, Morphism, Object};
use crate::linalg::{rat, ExactMatrix};

/// The dual of the algebra of upper triangular `n × n` matrices: basis `e_ij`
/// (`i ≤ j`), `δ(e_ij) = Σ_{i≤k≤j} e_ik ⊗ e_kj`, `ε(e_ij) = [i = j]`.
/// Not cocommutative for `n ≥ 2`.
pub fn triangular_coalgebra(n: usize) -> Comonoid<FdVect> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let names: Vec<String> = pairs.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    let x = Object::from_atoms(&names).expect("distinct names");
    let d = pairs.len();
    let index = |p: (usize, usize)| pairs.iter().position(|&q| q == p).expect("upper triangular index");
    let mut delta = ExactMatrix::zeros(d * d, d);
    let mut epsilon = ExactMatrix::zeros(1, d);
    for (col, &(i, j)) in pairs.iter().enumerate() {
        for k in i..=j {
            delta.set(index((i, k)) * d + index((k, j)), col, rat(1));
        }
        if i == j {
            epsilon.set(0, col, rat(1));
        }
    }
    Comonoid::new(
        Morphism::new(x.clone(), x.tensor(&x), delta).expect("shape"),
        Morphism::new(x, Object::unit(), epsilon).expect("shape"),
    )
    .expect("triangular coalgebra laws")
}

/// A comodule `I ⇸ S` over a diagonal comonoid: `grades[s]` basis vectors `m{s}_{k}` of degree `s`.
pub fn graded_right<B: FromFunction>(s: &Comonoid<B>, grades: &[usize]) -> Comodule<B> {
    let (x, degree) = graded_object(s, grades, "m");
    let n = s.carrier().dim();
    let table: Vec<usize> = degree.iter().enumerate().map(|(k, &g)| k * n + g).collect();
    let coaction = crate::context::function(&x, &x.tensor(s.carrier()), &table).expect("in range");
    Comodule::new(Comonoid::unit(), s.clone(), coaction).expect("graded comodule")
}

/// A comodule `S ⇸ I` over a diagonal comonoid.
pub fn graded_left<B: FromFunction>(s: &Comonoid<B>, grades: &[usize]) -> Comodule<B> {
    let (x, degree) = graded_object(s, grades, "n");
    let dim = x.dim();
    let table: Vec<usize> = degree.iter().enumerate().map(|(k, &g)| g * dim + k).collect();
    let coaction = crate::context::function(&x, &s.carrier().tensor(&x), &table).expect("in range");
    Comodule::new(s.clone(), Comonoid::unit(), coaction).expect("graded comodule")
}

fn graded_object<B: FromFunction>(s: &Comonoid<B>, grades: &[usize], prefix: &str) -> (Object, Vec<usize>) {
    assert_eq!(grades.len(), s.carrier().dim(), "one multiplicity per grade");
    let mut names = Vec::new();
    let mut degree = Vec::new();
    for (g, &count) in grades.iter().enumerate() {
        for k in 0..count {
            names.push(format!("{prefix}{}_{k}", s.carrier().label(g)));
            degree.push(g);
        }
    }
    (Object::from_atoms(&names).expect("distinct names"), degree)
}
