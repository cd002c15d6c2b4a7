use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cannot compose: lower diagram ends in {lower} but upper diagram starts at {upper}")]
    Compose { lower: String, upper: String },
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("closure needs an endomorphism, got {bottom} -> {top}")]
    NotEndomorphism { bottom: String, top: String },
    #[error("zero Hom space: {from} -> {to}")]
    ZeroHomSpace { from: String, to: String },
    #[error("unknown crossing {0}")]
    UnknownCrossing(usize),
    #[error("not antisymmetric: {0}")]
    NotAntisymmetric(String),
    #[error("coefficient left the ring Z[q, t, 1/z]: {0}")]
    NonIntegral(String),
    #[error("degenerate pairing for {0}")]
    DegeneratePairing(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("index out of range: {0}")]
    Index(String),
}

pub type Result<T> = std::result::Result<T, SkeinError>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> SkeinError {
    SkeinError::Parse { line, msg: msg.into() }
}
