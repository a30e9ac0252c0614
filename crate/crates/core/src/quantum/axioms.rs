use std::fmt;

use serde::Serialize;

use super::{id, witness_failure, QuantumCategory};
use crate::comod::{associator, cotensor_map, left_unitor, right_unitor};
use crate::context::{factor_through_mono, Backend, Morphism, Witness};
use crate::error::{Error, Result};

/// A failed equation: the clause, the first basis element where the two sides
/// differ and both composites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub clause: String,
    pub witness: Witness,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}", self.clause, self.witness)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail(Failure),
    /// Not decided because a map it depends on does not exist.
    Skipped {
        reason: String,
    },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn failure(&self) -> Option<&Failure> {
        match self {
            Verdict::Fail(f) => Some(f),
            _ => None,
        }
    }

    fn skipped(reason: &str) -> Self {
        Verdict::Skipped { reason: reason.to_string() }
    }

    fn from_failure(failure: Option<Failure>) -> Self {
        failure.map_or(Verdict::Pass, Verdict::Fail)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(failure) => write!(f, "fail: {failure}"),
            Verdict::Skipped { reason } => write!(f, "skipped: {reason}"),
        }
    }
}

/// Verdicts for the prerequisites and for Axioms 1–6 (index `k - 1`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub prerequisites: Vec<(String, Verdict)>,
    pub axioms: Vec<Verdict>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.prerequisites.iter().all(|(_, v)| v.is_pass()) && self.axioms.iter().all(Verdict::is_pass)
    }

    pub fn axiom(&self, k: usize) -> &Verdict {
        &self.axioms[k - 1]
    }

    /// Every failing verdict, prerequisites first.
    pub fn failures(&self) -> Vec<&Failure> {
        self.prerequisites.iter().map(|(_, v)| v).chain(&self.axioms).filter_map(Verdict::failure).collect()
    }

    /// The report for data that does not even form a quantum graph: the graph
    /// prerequisite fails and nothing else is decided.
    pub fn invalid_graph(e: Error) -> Self {
        let skipped = || Verdict::skipped("the data is not a quantum graph");
        AxiomReport {
            prerequisites: vec![("graph".to_string(), error_verdict("graph", e))],
            axioms: (0..6).map(|_| skipped()).collect(),
        }
    }

    /// Description of the first verdict that is not a pass.
    pub fn first_failure(&self) -> Option<String> {
        let prereq = self.prerequisites.iter().find(|(_, v)| !v.is_pass()).map(|(name, v)| format!("{name}: {v}"));
        prereq.or_else(|| {
            self.axioms.iter().enumerate().find(|(_, v)| !v.is_pass()).map(|(k, v)| format!("axiom {}: {v}", k + 1))
        })
    }
}

/// Turns an error raised while building a composite into a failed verdict when
/// it carries a witness; other errors are reported as a failure at index 0.
fn error_verdict(clause: &str, e: Error) -> Verdict {
    let witness = match &e {
        Error::LawViolation { witness, .. }
        | Error::DoesNotEqualize { witness }
        | Error::NotInImage { witness, .. }
        | Error::Axiom2Violated { witness }
        | Error::NgrDisagreement { witness }
        | Error::CoactionDoesNotRestrict { witness, .. }
        | Error::SideConditionFailed { witness, .. } => witness.clone(),
        _ => Witness { index: 0, label: String::new() },
    };
    Verdict::Fail(Failure { clause: clause.to_string(), witness, lhs: e.to_string(), rhs: String::new() })
}

fn equation<B: Backend>(clause: &str, lhs: Result<Morphism<B>>, rhs: Result<Morphism<B>>) -> Verdict {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => match witness_failure(clause, &l, &r) {
            Ok(f) => Verdict::from_failure(f),
            Err(e) => error_verdict(clause, e),
        },
        (Err(e), _) | (_, Err(e)) => error_verdict(clause, e),
    }
}

fn all_of(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    verdicts.into_iter().find(|v| !v.is_pass()).unwrap_or(Verdict::Pass)
}

/// `ν₂` is a comodule map `H → A`: `(1 ⊗ ν₂ ⊗ 1)δ_H = δ_A ν₂`.
fn nu2_colinear<B: Backend>(q: &QuantumCategory<B>) -> Verdict {
    let x = q.c().carrier();
    equation(
        "composition is a comodule map",
        q.h().coaction().then(&Morphism::tensor_all(&[&id(x), q.nu2(), &id(x)])),
        q.nu2().then(q.arrows().coaction()),
    )
}

/// `ν₀` is a comodule map from the identity comodule: `(1 ⊗ ν₀ ⊗ 1)δ₃ = δ_A ν₀`.
fn nu0_colinear<B: Backend>(q: &QuantumCategory<B>) -> Verdict {
    let x = q.c().carrier();
    equation(
        "unit is a comodule map",
        q.c().delta3().then(&Morphism::tensor_all(&[&id(x), q.nu0(), &id(x)])),
        q.nu0().then(q.arrows().coaction()),
    )
}

/// `γ_rC`: the common value of `(s ⊗ 1)δν₀` and `(t ⊗ 1)δν₀`.
fn gamma_r_c<B: Backend>(q: &QuantumCategory<B>) -> Result<Morphism<B>> {
    let spread = q.nu0().then(q.a().delta())?;
    let ac = q.a().carrier();
    let via_s = spread.then(&q.s().tensor(&id(ac)))?;
    let via_t = spread.then(&q.t().tensor(&id(ac)))?;
    match via_s.difference(&via_t)? {
        None => Ok(via_s),
        Some(witness) => Err(Error::NgrDisagreement { witness }),
    }
}

/// `γ_rH` with `(i ⊗ 1)γ_rH = (1 ⊗ 1 ⊗ ν₂)γ_l`.
fn gamma_r_h<B: Backend>(q: &QuantumCategory<B>) -> Result<Morphism<B>> {
    let ac = q.a().carrier();
    let target = q.gamma_l().then(&Morphism::tensor_all(&[&id(ac), &id(ac), q.nu2()]))?;
    let frame = q.inclusion().tensor(&id(ac));
    factor_through_mono(&frame, &target).map_err(|e| match e {
        Error::NotInImage { witness, .. } => Error::Axiom2Violated { witness },
        other => other,
    })
}

/// `(γ_rH, γ_rC)`, provided Axiom 2 and the unit agreement hold.
pub fn gamma_r_maps<B: Backend>(q: &QuantumCategory<B>) -> Result<(Morphism<B>, Morphism<B>)> {
    if let Verdict::Fail(f) = axiom2(q) {
        return Err(Error::Axiom2Violated { witness: f.witness });
    }
    Ok((gamma_r_h(q)?, gamma_r_c(q)?))
}

fn axiom1<B: Backend>(q: &QuantumCategory<B>) -> Verdict {
    let colinear = all_of([nu2_colinear(q), nu0_colinear(q)]);
    if !colinear.is_pass() {
        return colinear;
    }
    let a = q.arrows();
    let h = &q.pairs().cotensor;
    let associativity = associator(a, a, a).and_then(|assoc| {
        let lhs = cotensor_map(&assoc.left_outer, h, q.nu2(), &id(a.carrier()))?.then(q.nu2())?;
        let rhs = assoc
            .forward
            .map()
            .then(&cotensor_map(&assoc.right_outer, h, &id(a.carrier()), q.nu2())?)?
            .then(q.nu2())?;
        Ok((lhs, rhs))
    });
    let associativity = match associativity {
        Ok((lhs, rhs)) => equation("associativity of composition", Ok(lhs), Ok(rhs)),
        Err(e) => error_verdict("associativity of composition", e),
    };
    let left_unit = left_unitor(a)
        .and_then(|u| u.inverse.map().then(&cotensor_map(&u.cotensor, h, q.nu0(), &id(a.carrier()))?)?.then(q.nu2()));
    let right_unit = right_unitor(a)
        .and_then(|u| u.inverse.map().then(&cotensor_map(&u.cotensor, h, &id(a.carrier()), q.nu0())?)?.then(q.nu2()));
    all_of([
        associativity,
        equation("left unit law", left_unit, Ok(id(a.carrier()))),
        equation("right unit law", right_unit, Ok(id(a.carrier()))),
    ])
}

/// `(1 ⊗ ν₂)(t ⊗ ε ⊗ 1)γ_l = (1 ⊗ ν₂)(ε ⊗ s ⊗ 1)γ_l` as maps `H → C ⊗ A`.
fn axiom2<B: Backend>(q: &QuantumCategory<B>) -> Verdict {
    let hc = q.h().carrier();
    let eps = q.a().epsilon();
    let finish = id::<B>(q.c().carrier()).tensor(q.nu2());
    let lhs = q.gamma_l().then(&Morphism::tensor_all(&[q.t(), eps, &id(hc)])).and_then(|m| m.then(&finish));
    let rhs = q.gamma_l().then(&Morphism::tensor_all(&[eps, q.s(), &id(hc)])).and_then(|m| m.then(&finish));
    equation("target of the first arrow matches the source of the composite", lhs, rhs)
}

/// `δν₂ = (ν₂ ⊗ 1)γ_rH`.
fn axiom3<B: Backend>(q: &QuantumCategory<B>, gamma_rh: &Morphism<B>) -> Verdict {
    let ac = q.a().carrier();
    equation("comultiplication of a composite", q.nu2().then(q.a().delta()), gamma_rh.then(&q.nu2().tensor(&id(ac))))
}

/// `εν₂ = (ε ⊗ ε)i`, together with `(s ⊗ t)δν₂ = (s ⊗ t)i`.
fn axiom4<B: Backend>(q: &QuantumCategory<B>) -> Verdict {
    let eps = q.a().epsilon();
    let st = q.s().tensor(q.t());
    all_of([
        equation("counit of a composite", q.nu2().then(eps), q.inclusion().then(&eps.tensor(eps))),
        equation(
            "source and target of a composite",
            q.nu2().then(q.a().delta()).and_then(|m| m.then(&st)),
            q.inclusion().then(&st),
        ),
    ])
}

/// `δν₀ = (ν₀ ⊗ 1)γ_rC`.
fn axiom5<B: Backend>(q: &QuantumCategory<B>, gamma_rc: &Morphism<B>) -> Verdict {
    let ac = q.a().carrier();
    equation("comultiplication of a unit", q.nu0().then(q.a().delta()), gamma_rc.then(&q.nu0().tensor(&id(ac))))
}

/// `εν₀ = ε_C`.
fn axiom6<B: Backend>(q: &QuantumCategory<B>) -> Verdict {
    equation("counit of a unit", q.nu0().then(q.a().epsilon()), Ok(q.c().epsilon().clone()))
}

fn axiom3_gated<B: Backend>(q: &QuantumCategory<B>) -> Verdict {
    match gamma_r_h(q) {
        Ok(g) => axiom3(q, &g),
        Err(_) => Verdict::skipped("the map on composable pairs needs axiom 2"),
    }
}

fn axiom5_gated<B: Backend>(q: &QuantumCategory<B>) -> Verdict {
    match gamma_r_c(q) {
        Ok(g) => axiom5(q, &g),
        Err(_) => Verdict::skipped("the unit composites through source and target disagree"),
    }
}

/// Decides a single axiom `k ∈ 1..=6`.
pub fn check_axiom<B: Backend>(q: &QuantumCategory<B>, k: usize) -> Verdict {
    match k {
        1 => axiom1(q),
        2 => axiom2(q),
        3 if axiom2(q).is_pass() => axiom3_gated(q),
        3 => Verdict::skipped("the map on composable pairs needs axiom 2"),
        4 => axiom4(q),
        5 => axiom5_gated(q),
        6 => axiom6(q),
        _ => Verdict::skipped("there are six axioms"),
    }
}

/// All prerequisites and all six axioms. Axioms 3 and 5 are skipped when the
/// maps they mention do not exist.
pub fn check_axioms<B: Backend>(q: &QuantumCategory<B>) -> AxiomReport {
    let ngr = match gamma_r_c(q) {
        Ok(_) => Verdict::Pass,
        Err(e) => error_verdict("unit composites through source and target agree", e),
    };
    let a2 = axiom2(q);
    let gamma = if a2.is_pass() {
        match gamma_r_h(q) {
            Ok(_) => Verdict::Pass,
            Err(e) => error_verdict("composable pairs map into pairs times arrows", e),
        }
    } else {
        Verdict::skipped("needs axiom 2")
    };
    let prerequisites = vec![
        ("graph".to_string(), Verdict::Pass),
        ("composition is a comodule map".to_string(), nu2_colinear(q)),
        ("unit is a comodule map".to_string(), nu0_colinear(q)),
        ("unit agreement".to_string(), ngr),
        ("right map on composable pairs".to_string(), gamma.clone()),
    ];
    let a3 = if gamma.is_pass() { axiom3_gated(q) } else { Verdict::skipped("needs axiom 2") };
    let axioms = vec![axiom1(q), a2, a3, axiom4(q), axiom5_gated(q), axiom6(q)];
    AxiomReport { prerequisites, axioms }
}
