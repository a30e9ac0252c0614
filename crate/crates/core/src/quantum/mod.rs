//! Quantum graphs and quantum categories.
//!
//! A quantum graph is a pair of comonoids `C` (objects) and `A` (arrows) with
//! source and target maps `s: A → C°`, `t: A → C`. A quantum category adds a
//! composition `ν₂: H → A` on the object of composable pairs `H = A ⊗_C A` and
//! a unit `ν₀: C → A`; [`check_axioms`] decides whether the six axioms hold.

use crate::comod::{cotensor, Comodule, Comonoid, ComonoidMap, Cotensor};
use crate::context::{braiding, factor_through_mono, invert, permutation, Backend, Morphism, Witness};
use crate::error::{Error, Result};

mod axioms;

pub use axioms::{check_axiom, check_axioms, gamma_r_maps, AxiomReport, Failure, Verdict};

fn id<B: Backend>(x: &crate::context::Object) -> Morphism<B> {
    Morphism::identity(x)
}

/// Objects `C`, arrows `A`, source `s: A → C°` and target `t: A → C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumGraph<B: Backend> {
    c: Comonoid<B>,
    a: Comonoid<B>,
    s: Morphism<B>,
    t: Morphism<B>,
}

impl<B: Backend> QuantumGraph<B> {
    pub fn new(c: Comonoid<B>, a: Comonoid<B>, s: Morphism<B>, t: Morphism<B>) -> Result<Self> {
        let g = Self::new_unchecked(c, a, s, t);
        g.validate()?;
        Ok(g)
    }

    pub fn new_unchecked(c: Comonoid<B>, a: Comonoid<B>, s: Morphism<B>, t: Morphism<B>) -> Self {
        QuantumGraph { c, a, s, t }
    }

    pub fn c(&self) -> &Comonoid<B> {
        &self.c
    }

    pub fn a(&self) -> &Comonoid<B> {
        &self.a
    }

    pub fn s(&self) -> &Morphism<B> {
        &self.s
    }

    pub fn t(&self) -> &Morphism<B> {
        &self.t
    }

    /// `C` and `A` are comonoids, `s: A → C°` and `t: A → C` are comonoid maps
    /// and the images of `s` and `t` commute: `(s ⊗ t)δ = c(t ⊗ s)δ`.
    pub fn validate(&self) -> Result<()> {
        let invalid = |what: &str, e: Error| Error::InvalidGraph(format!("{what}: {e}"));
        self.c.validate().map_err(|e| invalid("object comonoid", e))?;
        self.a.validate().map_err(|e| invalid("arrow comonoid", e))?;
        for (name, m) in [("source", &self.s), ("target", &self.t)] {
            if m.source() != self.a.carrier() || m.target() != self.c.carrier() {
                return Err(Error::InvalidGraph(format!("the {name} map must go from arrows to objects")));
            }
        }
        ComonoidMap::new(self.a.clone(), self.c.opposite(), self.s.clone()).map_err(|e| invalid("source map", e))?;
        ComonoidMap::new(self.a.clone(), self.c.clone(), self.t.clone()).map_err(|e| invalid("target map", e))?;
        let x = self.c.carrier();
        let lhs = self.a.delta().then(&self.s.tensor(&self.t))?;
        let rhs = self.a.delta().then(&self.t.tensor(&self.s))?.then(&braiding(x, x))?;
        if let Some(w) = lhs.difference(&rhs)? {
            return Err(Error::InvalidGraph(format!("source and target do not commute at {w}")));
        }
        Ok(())
    }

    /// The joint coaction `a ↦ s(a₂) ⊗ a₁ ⊗ t(a₃)` making `A` a comodule `C ⇸ C`.
    fn arrow_coaction(&self) -> Result<Morphism<B>> {
        let (x, ac) = (self.c.carrier(), self.a.carrier());
        self.a
            .delta3()
            .then(&Morphism::tensor_all(&[&id(ac), &self.s, &self.t]))?
            .then(&permutation(&[ac, x, x], &[1, 0, 2])?)
    }
}

/// `A` as a comodule `C ⇸ C` with `δ_l = c⁻¹(1 ⊗ s ⊗ ε)δ₃` and `δ_r = (1 ⊗ ε ⊗ t)δ₃`.
pub fn arrows_as_bicomodule<B: Backend>(g: &QuantumGraph<B>) -> Result<Comodule<B>> {
    g.validate()?;
    let m = Comodule::new(g.c.clone(), g.c.clone(), g.arrow_coaction()?)
        .map_err(|e| Error::InvalidGraph(format!("arrow coactions: {e}")))?;
    Ok(m)
}

/// The object of composable arrows with its structure maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComposablePairs<B: Backend> {
    /// `H = A ⊗_C A` with inclusion `i: H → A ⊗ A`.
    pub cotensor: Cotensor<B>,
    /// `γ_l: H → A ⊗ A ⊗ H` with `(1 ⊗ 1 ⊗ i)γ_l = (1 ⊗ c ⊗ 1)(δ ⊗ δ)i`.
    pub gamma_l: Morphism<B>,
}

impl<B: Backend> ComposablePairs<B> {
    pub fn h(&self) -> &Comodule<B> {
        &self.cotensor.comodule
    }

    pub fn inclusion(&self) -> &Morphism<B> {
        &self.cotensor.inclusion
    }
}

pub fn composable_pairs<B: Backend>(g: &QuantumGraph<B>) -> Result<ComposablePairs<B>> {
    let arrows = arrows_as_bicomodule(g)?;
    pairs_of(g, &arrows)
}

fn pairs_of<B: Backend>(g: &QuantumGraph<B>, arrows: &Comodule<B>) -> Result<ComposablePairs<B>> {
    let cot = cotensor(arrows, arrows)?;
    let ac = g.a.carrier();
    let i = &cot.inclusion;
    let spread = i.then(&g.a.delta().tensor(g.a.delta()))?.then(&permutation(&[ac, ac, ac, ac], &[0, 2, 1, 3])?)?;
    let frame = Morphism::tensor_all(&[&id(ac), &id(ac), i]);
    let gamma_l = factor_through_mono(&frame, &spread)?;
    Ok(ComposablePairs { cotensor: cot, gamma_l })
}

/// A quantum graph with composition `ν₂: H → A` and unit `ν₀: C → A`.
///
/// Construction only checks that the graph is valid and the maps have the
/// right endpoints; the axioms are decided by [`check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumCategory<B: Backend> {
    graph: QuantumGraph<B>,
    arrows: Comodule<B>,
    pairs: ComposablePairs<B>,
    nu2: Morphism<B>,
    nu0: Morphism<B>,
}

impl<B: Backend> QuantumCategory<B> {
    pub fn new(graph: QuantumGraph<B>, nu2: Morphism<B>, nu0: Morphism<B>) -> Result<Self> {
        let pairs = composable_pairs(&graph)?;
        Self::from_pairs(graph, pairs, nu2, nu0)
    }

    /// Reuses a previously computed [`ComposablePairs`] of the same graph.
    pub fn from_pairs(
        graph: QuantumGraph<B>,
        pairs: ComposablePairs<B>,
        nu2: Morphism<B>,
        nu0: Morphism<B>,
    ) -> Result<Self> {
        let arrows = arrows_as_bicomodule(&graph)?;
        if pairs.cotensor.factors != (arrows.clone(), arrows.clone()) {
            return Err(Error::ShapeMismatch("composable pairs belong to a different graph".into()));
        }
        if nu2.source() != pairs.h().carrier() || nu2.target() != graph.a.carrier() {
            return Err(Error::ShapeMismatch(format!(
                "composition must be a map H -> A with H of dimension {}",
                pairs.h().carrier().dim()
            )));
        }
        if nu0.source() != graph.c.carrier() || nu0.target() != graph.a.carrier() {
            return Err(Error::ShapeMismatch("unit must be a map C -> A".into()));
        }
        Ok(QuantumCategory { graph, arrows, pairs, nu2, nu0 })
    }

    pub fn graph(&self) -> &QuantumGraph<B> {
        &self.graph
    }

    pub fn c(&self) -> &Comonoid<B> {
        &self.graph.c
    }

    pub fn a(&self) -> &Comonoid<B> {
        &self.graph.a
    }

    pub fn s(&self) -> &Morphism<B> {
        &self.graph.s
    }

    pub fn t(&self) -> &Morphism<B> {
        &self.graph.t
    }

    /// `A` as a comodule `C ⇸ C`.
    pub fn arrows(&self) -> &Comodule<B> {
        &self.arrows
    }

    pub fn pairs(&self) -> &ComposablePairs<B> {
        &self.pairs
    }

    pub fn h(&self) -> &Comodule<B> {
        self.pairs.h()
    }

    /// `i: H → A ⊗ A`.
    pub fn inclusion(&self) -> &Morphism<B> {
        self.pairs.inclusion()
    }

    pub fn gamma_l(&self) -> &Morphism<B> {
        &self.pairs.gamma_l
    }

    pub fn nu2(&self) -> &Morphism<B> {
        &self.nu2
    }

    pub fn nu0(&self) -> &Morphism<B> {
        &self.nu0
    }

    /// Same graph, different composition and unit.
    pub fn with_structure(&self, nu2: Morphism<B>, nu0: Morphism<B>) -> Result<Self> {
        Self::from_pairs(self.graph.clone(), self.pairs.clone(), nu2, nu0)
    }

    /// `Ok` when all six axioms hold, otherwise `AxiomsFail` naming the first failure.
    pub fn require_valid(&self) -> Result<()> {
        let report = check_axioms(self);
        match report.first_failure() {
            None => Ok(()),
            Some(message) => Err(Error::AxiomsFail(message)),
        }
    }
}

/// `q₁ ⊗ q₂` with objects `C₁ ⊗ C₂` and arrows `A₁ ⊗ A₂`. Composition is
/// transported along the comparison `H₁ ⊗ H₂ ≅ H`.
pub fn tensor_quantum_categories<B: Backend>(
    q1: &QuantumCategory<B>,
    q2: &QuantumCategory<B>,
) -> Result<QuantumCategory<B>> {
    let graph =
        QuantumGraph::new(q1.c().tensor(q2.c()), q1.a().tensor(q2.a()), q1.s().tensor(q2.s()), q1.t().tensor(q2.t()))?;
    let pairs = composable_pairs(&graph)?;
    let (a1, a2) = (q1.a().carrier(), q2.a().carrier());
    let interleaved = q1.inclusion().tensor(q2.inclusion()).then(&permutation(&[a1, a1, a2, a2], &[0, 2, 1, 3])?)?;
    let comparison = factor_through_mono(pairs.inclusion(), &interleaved)
        .map_err(|e| Error::ComparisonNotInvertible(e.to_string()))?;
    let inverse = invert(&comparison)?;
    let nu2 = inverse.then(&q1.nu2().tensor(q2.nu2()))?;
    let nu0 = q1.nu0().tensor(q2.nu0());
    QuantumCategory::from_pairs(graph, pairs, nu2, nu0)
}

/// The unit for [`tensor_quantum_categories`]: everything is the monoidal unit.
pub fn unit_quantum_category<B: Backend>() -> QuantumCategory<B> {
    let unit = Comonoid::unit();
    let x = unit.carrier().clone();
    let graph = QuantumGraph::new_unchecked(unit.clone(), unit, id(&x), id(&x));
    QuantumCategory::new(graph, id(&x), id(&x)).expect("the unit quantum category is well formed")
}

pub(crate) fn witness_failure<B: Backend>(
    clause: &str,
    lhs: &Morphism<B>,
    rhs: &Morphism<B>,
) -> Result<Option<Failure>> {
    Ok(lhs.difference(rhs)?.map(|witness: Witness| Failure {
        clause: clause.to_string(),
        witness,
        lhs: lhs.render(),
        rhs: rhs.render(),
    }))
}
