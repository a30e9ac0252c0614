use thiserror::Error;

use crate::context::Witness;
use crate::linalg::LinalgError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("backend mismatch: {0}")]
    BackendMismatch(String),
    #[error("not in image: {what} does not factor (first failure at {witness})")]
    NotInImage { what: String, witness: Witness },
    #[error("not a monomorphism: {0}")]
    NotMono(String),
    #[error("not an epimorphism: {0}")]
    NotEpi(String),
    #[error("pair is not coreflexive for the supplied retraction: {0}")]
    NotCoreflexive(String),
    #[error("map does not equalize the pair: composites differ at {witness}")]
    DoesNotEqualize { witness: Witness },
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("{law} fails at {witness}")]
    LawViolation { law: String, witness: Witness },
    #[error("side condition {clause} fails at {witness}")]
    SideConditionFailed { clause: String, witness: Witness },
    #[error("invalid quantum graph: {0}")]
    InvalidGraph(String),
    #[error("coaction on {object} does not restrict along the inclusion (first failure at {witness})")]
    CoactionDoesNotRestrict { object: String, witness: Witness },
    #[error("axiom 2 violated at {witness}")]
    Axiom2Violated { witness: Witness },
    #[error("the two unit composites disagree at {witness}")]
    NgrDisagreement { witness: Witness },
    #[error("comparison map is not invertible: {0}")]
    ComparisonNotInvertible(String),
    #[error("invalid category: {0}")]
    InvalidCategory(String),
    #[error("quantum category axioms fail: {0}")]
    AxiomsFail(String),
    #[error("invalid component data: {0}")]
    InvalidComponentData(String),
    #[error("malformed document: {0}")]
    Schema(String),
}
