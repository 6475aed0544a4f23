use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse failure classes, used by the CLI to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    CapExceeded,
    Verification,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operation requires at least one generator, got the zero ideal")]
    ZeroIdeal,

    #[error("exponent overflow")]
    Overflow,

    #[error("exponent of {divisor} does not divide {dividend}")]
    NotDivisible { divisor: String, dividend: String },

    #[error("vertex index {index} out of range for {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("facet list must be nonempty and contain no empty facet")]
    EmptyFacet,

    #[error("face {face}: {reason}")]
    InvalidFace { face: i64, reason: String },

    #[error("boundary of boundary is nonzero at face {face}")]
    BoundarySquareNonzero { face: i64 },

    #[error("{what}: {actual} exceeds the configured cap of {limit}")]
    CapExceeded { what: &'static str, limit: usize, actual: usize },

    #[error("vertex labels of the complex do not match the minimal generators of the ideal")]
    LabelMismatch,

    #[error("ideal is not generic")]
    NotGeneric,

    #[error("ideal is not Artinian")]
    NotArtinian,

    #[error("complex does not support a resolution")]
    NotResolution,

    #[error("cellular resolution is not minimal")]
    NotMinimal,

    #[error("ghost exponent {given} must exceed the maximal generator exponent {max}")]
    GhostExponentTooSmall { given: u32, max: u32 },

    #[error("staircase diagrams need exactly 2 variables, got {0}")]
    NotPlanar(usize),

    #[error("internal verification failed: {0}")]
    Verification(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } | Error::UnknownVariable(_) => ErrorKind::Parse,
            Error::CapExceeded { .. } => ErrorKind::CapExceeded,
            Error::Verification(_) => ErrorKind::Verification,
            _ => ErrorKind::Precondition,
        }
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, column, message: message.into() }
    }
}
