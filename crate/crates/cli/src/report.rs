//! Check reports, rendered as text or JSON.

use std::fmt::Write;

use qcat_core::context::Witness;
use qcat_core::qcat::CheckReport;
use qcat_core::quantum::{AxiomReport, Verdict};
use qcat_core::Error;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail {
        message: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<Witness>,
        #[serde(skip_serializing_if = "Option::is_none")]
        lhs: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        rhs: Option<String>,
    },
    Skipped {
        reason: String,
    },
}

impl Outcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    pub fn from_verdict(v: &Verdict) -> Self {
        match v {
            Verdict::Pass => Outcome::Pass,
            Verdict::Skipped { reason } => Outcome::Skipped { reason: reason.clone() },
            Verdict::Fail(f) => {
                let rhs = (!f.rhs.is_empty()).then(|| f.rhs.clone());
                Outcome::Fail {
                    message: f.to_string(),
                    witness: Some(f.witness.clone()),
                    lhs: Some(f.lhs.clone()),
                    rhs,
                }
            }
        }
    }

    pub fn from_result(r: Result<(), Error>) -> Self {
        match r {
            Ok(()) => Outcome::Pass,
            Err(e) => Outcome::from_error(&e),
        }
    }

    pub fn from_error(e: &Error) -> Self {
        let witness = match e {
            Error::LawViolation { witness, .. }
            | Error::DoesNotEqualize { witness }
            | Error::NotInImage { witness, .. }
            | Error::SideConditionFailed { witness, .. }
            | Error::CoactionDoesNotRestrict { witness, .. }
            | Error::Axiom2Violated { witness }
            | Error::NgrDisagreement { witness } => Some(witness.clone()),
            _ => None,
        };
        Outcome::Fail { message: e.to_string(), witness, lhs: None, rhs: None }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(flatten)]
    pub outcome: Outcome,
    /// Passing checks that only gate others are left out of the text report.
    #[serde(skip)]
    pub quiet: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub kind: String,
    pub backend: String,
    pub passes: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(kind: &str, backend: &str) -> Self {
        Report { kind: kind.into(), backend: backend.into(), passes: true, checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, outcome: Outcome) {
        self.passes &= outcome.is_pass();
        self.checks.push(Check { name: name.into(), outcome, quiet: false });
    }

    fn push_quiet(&mut self, name: impl Into<String>, outcome: Outcome) {
        self.push(name, outcome);
        if let Some(last) = self.checks.last_mut() {
            last.quiet = last.outcome.is_pass();
        }
    }

    /// Prerequisites followed by the six axioms.
    pub fn push_axioms(&mut self, report: &AxiomReport) {
        for (name, v) in &report.prerequisites {
            self.push_quiet(format!("prerequisite {name}"), Outcome::from_verdict(v));
        }
        for (k, v) in report.axioms.iter().enumerate() {
            self.push(format!("axiom {}", k + 1), Outcome::from_verdict(v));
        }
    }

    pub fn push_checks(&mut self, report: &CheckReport) {
        for (name, v) in &report.checks {
            self.push(name.clone(), Outcome::from_verdict(v));
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("{} over {}\n", self.kind, self.backend);
        for check in self.checks.iter().filter(|c| !c.quiet) {
            match &check.outcome {
                Outcome::Pass => writeln!(out, "{}: pass", check.name),
                Outcome::Skipped { reason } => writeln!(out, "{}: skipped ({reason})", check.name),
                Outcome::Fail { message, witness, lhs, rhs } => {
                    let mut line = format!("{}: fail: {message}", check.name);
                    if let Some(w) = witness {
                        write!(line, "\n  witness: {w}").ok();
                    }
                    if let Some(lhs) = lhs {
                        write!(line, "\n  lhs: {}", indent(lhs)).ok();
                    }
                    if let Some(rhs) = rhs {
                        write!(line, "\n  rhs: {}", indent(rhs)).ok();
                    }
                    writeln!(out, "{line}")
                }
            }
            .expect("writing to a string");
        }
        let passed = self.checks.iter().filter(|c| c.outcome.is_pass()).count();
        writeln!(out, "{passed} of {} checks passed", self.checks.len()).expect("writing to a string");
        out
    }

    pub fn json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }
}

fn indent(text: &str) -> String {
    text.trim_end().replace('\n', "\n       ")
}
