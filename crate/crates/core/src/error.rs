use thiserror::Error;

use crate::graph::Token;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: token `{token}` uses a reserved prefix")]
    ReservedPrefix { line: usize, token: String },
    #[error("token `{0}` uses a reserved prefix")]
    ReservedToken(String),
    #[error("invalid token `{0}`")]
    InvalidToken(String),
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("restriction leaves no edges")]
    EmptyResult,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(Token),
    #[error("unknown label `{0}`")]
    UnknownLabel(Token),
    #[error("unknown element `{0}`")]
    UnknownElement(Token),
    #[error("graph is not deterministic")]
    NotDeterministic,
    #[error("graph is not co-deterministic")]
    NotCoDeterministic,
    #[error("line {line}: row has {found} entries, expected {expected}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: entry `{token}` is not an element of the carrier")]
    NotClosed { line: usize, token: String },
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("{0}")]
    ModePreconditionFailed(String),
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("labeling does not match the generator set: {0}")]
    LabelingDomainMismatch(String),
    #[error("malformed injection: {0}")]
    MalformedInjection(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("inconsistent product {left} x {right}")]
    InconsistentProduct { left: Token, right: Token },
    #[error("run of witness word for `{target}` fails from `{from}`")]
    RunFailed { from: Token, target: Token },
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
