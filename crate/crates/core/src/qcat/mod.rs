//! Quantum functors and quantum natural transformations.
//!
//! A functor `q → q'` is a pair of comonoid maps `f: C → C'`, `φ: A → A'`
//! compatible with sources, targets, units and composition. Composition of
//! functors is componentwise.

use serde::Serialize;

use crate::comod::{cotensor, cotensor_map, Comodule, ComonoidMap};
use crate::context::{Backend, Morphism, Object};
use crate::error::{Error, Result};
use crate::quantum::{Failure, QuantumCategory, Verdict};

fn id<B: Backend>(x: &Object) -> Morphism<B> {
    Morphism::identity(x)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumFunctor<B: Backend> {
    pub source: QuantumCategory<B>,
    pub target: QuantumCategory<B>,
    /// `f: C → C'`.
    pub f: Morphism<B>,
    /// `φ: A → A'`.
    pub phi: Morphism<B>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumNatTransformation<B: Backend> {
    pub source: QuantumFunctor<B>,
    pub target: QuantumFunctor<B>,
    /// `τ: A → A'`.
    pub tau: Morphism<B>,
}

/// Named verdicts, in the order they were decided.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub checks: Vec<(String, Verdict)>,
}

impl CheckReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|(_, v)| v.is_pass())
    }

    pub fn failures(&self) -> Vec<&Failure> {
        self.checks.iter().filter_map(|(_, v)| v.failure()).collect()
    }

    pub fn first_failure(&self) -> Option<String> {
        self.checks.iter().find(|(_, v)| !v.is_pass()).map(|(name, v)| format!("{name}: {v}"))
    }

    fn push(&mut self, name: &str, verdict: Verdict) -> bool {
        let ok = verdict.is_pass();
        self.checks.push((name.to_string(), verdict));
        ok
    }

    fn skip_rest(&mut self, names: &[&str], reason: &str) {
        for name in names {
            self.checks.push((name.to_string(), Verdict::Skipped { reason: reason.to_string() }));
        }
    }
}

fn fail_at(clause: &str, e: Error) -> Verdict {
    let witness = match &e {
        Error::LawViolation { witness, .. }
        | Error::DoesNotEqualize { witness }
        | Error::NotInImage { witness, .. } => witness.clone(),
        _ => crate::context::Witness { index: 0, label: String::new() },
    };
    Verdict::Fail(Failure { clause: clause.to_string(), witness, lhs: e.to_string(), rhs: String::new() })
}

fn equal<B: Backend>(clause: &str, lhs: Result<Morphism<B>>, rhs: Result<Morphism<B>>) -> Verdict {
    let (l, r) = match (lhs, rhs) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => return fail_at(clause, e),
    };
    match l.difference(&r) {
        Ok(None) => Verdict::Pass,
        Ok(Some(witness)) => {
            Verdict::Fail(Failure { clause: clause.to_string(), witness, lhs: l.render(), rhs: r.render() })
        }
        Err(e) => fail_at(clause, e),
    }
}

fn comonoid_map<B: Backend>(
    clause: &str,
    source: &crate::comod::Comonoid<B>,
    target: &crate::comod::Comonoid<B>,
    map: &Morphism<B>,
) -> Verdict {
    if map.source() != source.carrier() || map.target() != target.carrier() {
        return fail_at(clause, Error::ShapeMismatch(format!("{clause} has the wrong endpoints")));
    }
    match ComonoidMap::new(source.clone(), target.clone(), map.clone()) {
        Ok(_) => Verdict::Pass,
        Err(e) => fail_at(clause, e),
    }
}

/// `A` viewed as a comodule `C' ⇸ C'` through `f`: coaction `(f ⊗ 1 ⊗ f)δ`.
fn transported<B: Backend>(
    q: &QuantumCategory<B>,
    c_prime: &crate::comod::Comonoid<B>,
    f: &Morphism<B>,
) -> Result<Comodule<B>> {
    let a = q.arrows();
    let coaction = a.coaction().then(&Morphism::tensor_all(&[f, &id(a.carrier()), f]))?;
    Comodule::new(c_prime.clone(), c_prime.clone(), coaction)
}

const FUNCTOR_CHECKS: [&str; 7] = [
    "object map is a comonoid map",
    "arrow map is a comonoid map",
    "sources are preserved",
    "targets are preserved",
    "units are preserved",
    "composable pairs are preserved",
    "composition is preserved",
];

/// Checks a functor candidate. Later checks are skipped once an earlier one
/// fails, since the maps they compare need not exist.
pub fn validate_functor<B: Backend>(functor: &QuantumFunctor<B>) -> CheckReport {
    let QuantumFunctor { source: q, target: r, f, phi } = functor;
    let mut report = CheckReport { checks: Vec::new() };
    let go = |report: &mut CheckReport, k: usize, verdict: Verdict| {
        let ok = report.push(FUNCTOR_CHECKS[k], verdict);
        if !ok {
            report.skip_rest(&FUNCTOR_CHECKS[k + 1..], "an earlier check failed");
        }
        ok
    };
    if !go(&mut report, 0, comonoid_map(FUNCTOR_CHECKS[0], q.c(), r.c(), f))
        || !go(&mut report, 1, comonoid_map(FUNCTOR_CHECKS[1], q.a(), r.a(), phi))
        || !go(&mut report, 2, equal(FUNCTOR_CHECKS[2], phi.then(r.s()), q.s().then(f)))
        || !go(&mut report, 3, equal(FUNCTOR_CHECKS[3], phi.then(r.t()), q.t().then(f)))
        || !go(&mut report, 4, equal(FUNCTOR_CHECKS[4], f.then(r.nu0()), q.nu0().then(phi)))
    {
        return report;
    }
    let comparison = transported(q, r.c(), f).and_then(|m| cotensor(&m, &m)).and_then(|cot| {
        let iota = cot.factor(q.inclusion())?;
        let lifted = cotensor_map(&cot, &r.pairs().cotensor, phi, phi)?;
        iota.then(&lifted)
    });
    let pairs = match comparison {
        Ok(m) => m,
        Err(e) => {
            go(&mut report, 5, fail_at(FUNCTOR_CHECKS[5], e));
            return report;
        }
    };
    go(&mut report, 5, Verdict::Pass);
    go(&mut report, 6, equal(FUNCTOR_CHECKS[6], pairs.then(r.nu2()), q.nu2().then(phi)));
    report
}

pub fn identity_functor<B: Backend>(q: &QuantumCategory<B>) -> QuantumFunctor<B> {
    QuantumFunctor { source: q.clone(), target: q.clone(), f: id(q.c().carrier()), phi: id(q.a().carrier()) }
}

/// `G ∘ F = (f' f, φ' φ)`.
pub fn compose_functors<B: Backend>(
    first: &QuantumFunctor<B>,
    second: &QuantumFunctor<B>,
) -> Result<QuantumFunctor<B>> {
    if first.target != second.source {
        return Err(Error::EndpointMismatch("the first functor's target is not the second functor's source".into()));
    }
    let composite = QuantumFunctor {
        source: first.source.clone(),
        target: second.target.clone(),
        f: first.f.then(&second.f)?,
        phi: first.phi.then(&second.phi)?,
    };
    if let Some(message) = validate_functor(&composite).first_failure() {
        return Err(Error::AxiomsFail(format!("composite functor: {message}")));
    }
    Ok(composite)
}

const NATURAL_CHECKS: [&str; 5] = [
    "component map is a comonoid map",
    "sources go to the first functor",
    "targets go to the second functor",
    "composition with the first functor",
    "composition with the second functor",
];

/// Checks `τ: F ⇒ G`: `s'τ = f s`, `t'τ = g t`, and
/// `ν₂'(φ ⊗ τ)i = τν₂ = ν₂'(τ ⊗ φ')i` after corestricting to `H'`.
pub fn validate_nat_transformation<B: Backend>(n: &QuantumNatTransformation<B>) -> CheckReport {
    let (ff, gg, tau) = (&n.source, &n.target, &n.tau);
    let mut report = CheckReport { checks: Vec::new() };
    if ff.source != gg.source || ff.target != gg.target {
        report.push(
            NATURAL_CHECKS[0],
            fail_at(NATURAL_CHECKS[0], Error::EndpointMismatch("the two functors have different endpoints".into())),
        );
        report.skip_rest(&NATURAL_CHECKS[1..], "an earlier check failed");
        return report;
    }
    let (q, r) = (&ff.source, &ff.target);
    let checks = [
        comonoid_map(NATURAL_CHECKS[0], q.a(), r.a(), tau),
        equal(NATURAL_CHECKS[1], tau.then(r.s()), q.s().then(&ff.f)),
        equal(NATURAL_CHECKS[2], tau.then(r.t()), q.t().then(&gg.f)),
    ];
    for (k, verdict) in checks.into_iter().enumerate() {
        if !report.push(NATURAL_CHECKS[k], verdict) {
            report.skip_rest(&NATURAL_CHECKS[k + 1..], "an earlier check failed");
            return report;
        }
    }
    let h_prime = &r.pairs().cotensor;
    let expected = q.nu2().then(tau);
    for (k, left, right) in [(3, &ff.phi, tau), (4, tau, &gg.phi)] {
        let lhs =
            q.inclusion().then(&left.tensor(right)).and_then(|m| h_prime.factor(&m)).and_then(|m| m.then(r.nu2()));
        report.push(NATURAL_CHECKS[k], equal(NATURAL_CHECKS[k], lhs, expected.clone()));
    }
    report
}

/// The identity transformation of `F`, with `τ = φ`.
pub fn identity_nat_transformation<B: Backend>(functor: &QuantumFunctor<B>) -> QuantumNatTransformation<B> {
    QuantumNatTransformation { source: functor.clone(), target: functor.clone(), tau: functor.phi.clone() }
}
