use qcat_core::constructors::{from_bialgebra, from_hopf_group_coalgebra, BialgebraVerdict};
use qcat_core::context::Backend;
use qcat_core::document::{Backed, Body, CategoryData, Document, FunctorData};
use qcat_core::qcat::{validate_functor, validate_nat_transformation, QuantumFunctor};
use qcat_core::quantum::{check_axiom, check_axioms, AxiomReport, QuantumCategory};
use qcat_core::Error;

use crate::report::{Outcome, Report};
use crate::CliError;

/// Runs every check that applies to the document, or a single axiom.
pub fn check(doc: &Document, axiom: Option<usize>) -> Result<Report, CliError> {
    let mut report = Report::new(doc.kind(), &doc.backend().to_string());
    let takes_axiom = matches!(doc.kind(), "quantum-category" | "bialgebra" | "hopf-group-coalgebra");
    if axiom.is_some() && !takes_axiom {
        return Err(CliError::Malformed(format!(
            "--axiom applies to quantum categories, bialgebras and Hopf group coalgebras, not to a {}",
            doc.kind()
        )));
    }
    match &doc.body {
        Body::FinSet(b) => check_backed(b, axiom, &mut report)?,
        Body::FdVect(b) => check_backed(b, axiom, &mut report)?,
        Body::OpFinSet(b) => check_backed(b, axiom, &mut report)?,
        Body::OpFdVect(b) => check_backed(b, axiom, &mut report)?,
        Body::FinCat { category, .. } => report.push("category laws", Outcome::from_result(category.validate())),
        Body::Bialgebra(b) => bialgebra_report(&from_bialgebra(b), axiom, &mut report),
        Body::HopfGroupCoalgebra(h) => match from_hopf_group_coalgebra(h) {
            Ok(out) => {
                log::info!("underlying group has {} elements", out.group.morphism_count());
                bialgebra_report(&out.verdict, axiom, &mut report);
            }
            Err(e) => report.push("component data", Outcome::from_error(&e)),
        },
    }
    Ok(report)
}

fn axioms_report<B: Backend>(q: &QuantumCategory<B>, axiom: Option<usize>, report: &mut Report) {
    match axiom {
        Some(k) => report.push(format!("axiom {k}"), Outcome::from_verdict(&check_axiom(q, k))),
        None => report.push_axioms(&check_axioms(q)),
    }
}

fn invalid_report(e: Error, axiom: Option<usize>, report: &mut Report) {
    let full = AxiomReport::invalid_graph(e);
    match axiom {
        Some(k) => {
            for (name, v) in &full.prerequisites {
                report.push(format!("prerequisite {name}"), Outcome::from_verdict(v));
            }
            report.push(format!("axiom {k}"), Outcome::from_verdict(full.axiom(k)));
        }
        None => report.push_axioms(&full),
    }
}

fn bialgebra_report(v: &BialgebraVerdict, axiom: Option<usize>, report: &mut Report) {
    match (&v.category, axiom) {
        (Some(q), Some(k)) => axioms_report(q, Some(k), report),
        (None, Some(k)) => {
            for (name, verdict) in &v.report.prerequisites {
                report.push(format!("prerequisite {name}"), Outcome::from_verdict(verdict));
            }
            report.push(format!("axiom {k}"), Outcome::from_verdict(v.report.axiom(k)));
        }
        (_, None) => report.push_axioms(&v.report),
    }
}

/// Builds a category; a malformed pair basis is a schema error, an invalid graph a failed check.
fn build<B: Backend>(
    data: &CategoryData<B>,
    what: &str,
    report: &mut Report,
) -> Result<Option<QuantumCategory<B>>, CliError> {
    match data.build() {
        Ok(q) => Ok(Some(q)),
        Err(Error::Schema(msg)) => Err(CliError::Malformed(format!("{what}{msg}"))),
        Err(e) => {
            report.push(format!("{what}graph"), Outcome::from_error(&e));
            Ok(None)
        }
    }
}

fn build_functor<B: Backend>(
    data: &FunctorData<B>,
    what: &str,
    report: &mut Report,
) -> Result<Option<QuantumFunctor<B>>, CliError> {
    let source = build(&data.source, &format!("{what}source."), report)?;
    let target = build(&data.target, &format!("{what}target."), report)?;
    Ok(source.zip(target).map(|(source, target)| QuantumFunctor {
        source,
        target,
        f: data.f.clone(),
        phi: data.phi.clone(),
    }))
}

fn check_backed<B: Backend>(b: &Backed<B>, axiom: Option<usize>, report: &mut Report) -> Result<(), CliError> {
    match b {
        Backed::Comonoid(c) => report.push("comonoid laws", Outcome::from_result(c.validate())),
        Backed::Comodule(m) => report.push("comodule laws", Outcome::from_result(m.validate())),
        Backed::Graph(g) => report.push("quantum graph", Outcome::from_result(g.validate())),
        Backed::Category(data) => match data.graph.validate() {
            Err(e) => invalid_report(e, axiom, report),
            Ok(()) => {
                if let Some(q) = build(data, "", report)? {
                    axioms_report(&q, axiom, report);
                }
            }
        },
        Backed::Functor(data) => {
            if let Some(f) = build_functor(data, "", report)? {
                report.push_checks(&validate_functor(&f));
            }
        }
        Backed::Natural(data) => {
            let source = build_functor(&data.source, "source.", report)?;
            let target = build_functor(&data.target, "target.", report)?;
            if let (Some(source), Some(target)) = (source, target) {
                let n = qcat_core::qcat::QuantumNatTransformation { source, target, tau: data.tau.clone() };
                report.push_checks(&validate_nat_transformation(&n));
            }
        }
    }
    Ok(())
}
