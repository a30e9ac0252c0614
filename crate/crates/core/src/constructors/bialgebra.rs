//! Bialgebras as quantum categories in the opposite of vector spaces, over the
//! trivial base.

use crate::comod::Comonoid;
use crate::context::{FdVect, Morphism, Object, Opposite};
use crate::error::{Error, Result};
use crate::linalg::{permutation_map, rat, ExactMatrix};
use crate::quantum::{check_axioms, AxiomReport, QuantumCategory, QuantumGraph};

pub type OpVect = Opposite<FdVect>;

/// Algebra and coalgebra structure on one carrier, as matrices in the
/// carrier's basis. Tensor powers use left-major indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bialgebra {
    pub carrier: Object,
    /// `A ⊗ A → A`.
    pub mult: ExactMatrix,
    /// `I → A`.
    pub unit: ExactMatrix,
    /// `A → A ⊗ A`.
    pub comult: ExactMatrix,
    /// `A → I`.
    pub counit: ExactMatrix,
}

impl Bialgebra {
    pub fn new(
        carrier: Object,
        mult: ExactMatrix,
        unit: ExactMatrix,
        comult: ExactMatrix,
        counit: ExactMatrix,
    ) -> Result<Self> {
        let n = carrier.dim();
        let shapes = [
            ("multiplication", &mult, (n, n * n)),
            ("unit", &unit, (n, 1)),
            ("comultiplication", &comult, (n * n, n)),
            ("counit", &counit, (1, n)),
        ];
        for (name, m, (rows, cols)) in shapes {
            if (m.rows(), m.cols()) != (rows, cols) {
                return Err(Error::ShapeMismatch(format!(
                    "{name} is {}x{}, expected {rows}x{cols}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Bialgebra { carrier, mult, unit, comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// The monoid algebra `Q[M]` with group-like basis; `table[a][b] = a·b`.
    pub fn monoid_algebra(elements: &[&str], table: &[Vec<usize>]) -> Result<Self> {
        let n = elements.len();
        let unit = unit_element(table)?;
        let carrier = Object::from_atoms(elements)?;
        let mult = ExactMatrix::from_triples(n, n * n, pairs(n).map(|(a, b)| (table[a][b], a * n + b, rat(1))));
        let comult = ExactMatrix::from_triples(n * n, n, (0..n).map(|g| (g * n + g, g, rat(1))));
        let counit = ExactMatrix::from_triples(1, n, (0..n).map(|g| (0, g, rat(1))));
        Self::new(carrier, mult, basis_vector(n, unit), comult, counit)
    }

    /// The algebra of functions on a finite monoid: pointwise product and
    /// `Δ(p_k) = Σ_{gh = k} p_g ⊗ p_h`.
    pub fn function_algebra(elements: &[&str], table: &[Vec<usize>]) -> Result<Self> {
        let n = elements.len();
        let unit = unit_element(table)?;
        let names: Vec<String> = elements.iter().map(|g| format!("p_{g}")).collect();
        let carrier = Object::from_atoms(&names)?;
        let mult = ExactMatrix::from_triples(n, n * n, (0..n).map(|g| (g, g * n + g, rat(1))));
        let ones = ExactMatrix::from_triples(n, 1, (0..n).map(|g| (g, 0, rat(1))));
        let comult = ExactMatrix::from_triples(n * n, n, pairs(n).map(|(g, h)| (g * n + h, table[g][h], rat(1))));
        let counit = ExactMatrix::from_triples(1, n, [(0, unit, rat(1))]);
        Self::new(carrier, mult, ones, comult, counit)
    }

    /// Matrix algebra `M_n` with the comatrix coalgebra `Δ(e_ij) = Σ_k e_ik ⊗ e_kj`.
    /// Both structures are fine on their own but the counit is not multiplicative.
    pub fn matrix_non_example(n: usize) -> Result<Self> {
        let d = n * n;
        let names: Vec<String> = pairs(n).map(|(i, j)| format!("e{i}{j}")).collect();
        let carrier = Object::from_atoms(&names)?;
        let e = |i: usize, j: usize| i * n + j;
        let mult = ExactMatrix::from_triples(
            d,
            d * d,
            pairs(n).flat_map(|(i, j)| (0..n).map(move |k| (e(i, k), e(i, j) * d + e(j, k), rat(1)))),
        );
        let unit = ExactMatrix::from_triples(d, 1, (0..n).map(|i| (e(i, i), 0, rat(1))));
        let comult = ExactMatrix::from_triples(
            d * d,
            d,
            pairs(n).flat_map(|(i, j)| (0..n).map(move |k| (e(i, k) * d + e(k, j), e(i, j), rat(1)))),
        );
        let counit = ExactMatrix::from_triples(1, d, (0..n).map(|i| (0, e(i, i), rat(1))));
        Self::new(carrier, mult, unit, comult, counit)
    }

    /// The same structure in the basis given by the columns of an invertible `p`.
    pub fn transport(&self, p: &ExactMatrix) -> Result<Self> {
        let n = self.dim();
        let inverse = p.factor_through_mono(&ExactMatrix::identity(n))?;
        Self::new(
            self.carrier.clone(),
            inverse.mul(&self.mult).mul(&p.kron(p)),
            inverse.mul(&self.unit),
            inverse.kron(&inverse).mul(&self.comult).mul(p),
            self.counit.mul(p),
        )
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> + Clone {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn basis_vector(n: usize, k: usize) -> ExactMatrix {
    ExactMatrix::from_triples(n, 1, [(k, 0, rat(1))])
}

fn unit_element(table: &[Vec<usize>]) -> Result<usize> {
    let n = table.len();
    (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| Error::InvalidComponentData("the monoid has no identity element".into()))
}

/// Names of the bialgebra laws that fail, checked directly on the matrices.
pub fn bialgebra_law_failures(b: &Bialgebra) -> Vec<&'static str> {
    let n = b.dim();
    let one = ExactMatrix::identity(n);
    let swap = permutation_map(&[0, 2, 1, 3], &[n, n, n, n]).expect("a valid permutation");
    let (m, eta, delta, eps) = (&b.mult, &b.unit, &b.comult, &b.counit);
    let laws = [
        ("associativity", m.mul(&m.kron(&one)) == m.mul(&one.kron(m))),
        ("left unit", m.mul(&eta.kron(&one)) == one),
        ("right unit", m.mul(&one.kron(eta)) == one),
        ("coassociativity", delta.kron(&one).mul(delta) == one.kron(delta).mul(delta)),
        ("left counit", eps.kron(&one).mul(delta) == one),
        ("right counit", one.kron(eps).mul(delta) == one),
        ("multiplicative comultiplication", delta.mul(m) == m.kron(m).mul(&swap).mul(&delta.kron(delta))),
        ("unital comultiplication", delta.mul(eta) == eta.kron(eta)),
        ("multiplicative counit", eps.mul(m) == eps.kron(eps)),
        ("unital counit", eps.mul(eta) == ExactMatrix::identity(1)),
    ];
    laws.into_iter().filter(|(_, ok)| !ok).map(|(name, _)| name).collect()
}

/// The outcome of [`from_bialgebra`]. `category` is absent when the algebra
/// part is not even a comonoid in the opposite category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BialgebraVerdict {
    pub category: Option<QuantumCategory<OpVect>>,
    pub report: AxiomReport,
}

impl BialgebraVerdict {
    pub fn passes(&self) -> bool {
        self.report.passes()
    }
}

fn op(source: &Object, target: &Object, m: &ExactMatrix) -> Result<Morphism<OpVect>> {
    Ok(Morphism::<FdVect>::new(source.clone(), target.clone(), m.clone())?.op())
}

/// `C` is the unit comonoid, `A` carries `(m, η)` read backwards,
/// `s = t = η`, `ν₂ = Δ` and `ν₀ = ε`, all read in the opposite category.
pub fn bialgebra_category(b: &Bialgebra) -> Result<QuantumCategory<OpVect>> {
    let a = &b.carrier;
    let aa = a.tensor(a);
    let unit = Object::unit();
    let arrows = Comonoid::new_unchecked(op(&aa, a, &b.mult)?, op(&unit, a, &b.unit)?);
    let s = op(&unit, a, &b.unit)?;
    let graph = QuantumGraph::new(Comonoid::unit(), arrows, s.clone(), s)?;
    let pairs = crate::quantum::composable_pairs(&graph)?;
    let nu2 = pairs.inclusion().then(&op(a, &aa, &b.comult)?)?;
    let nu0 = op(a, &unit, &b.counit)?;
    QuantumCategory::from_pairs(graph, pairs, nu2, nu0)
}

/// Builds the quantum category of `b` and decides the axioms. Failures are
/// reported, never raised, so that non-examples can be examined.
pub fn from_bialgebra(b: &Bialgebra) -> BialgebraVerdict {
    match bialgebra_category(b) {
        Ok(q) => BialgebraVerdict { report: check_axioms(&q), category: Some(q) },
        Err(e) => BialgebraVerdict { category: None, report: AxiomReport::invalid_graph(e) },
    }
}
