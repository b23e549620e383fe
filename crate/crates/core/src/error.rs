use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in GF(4)")]
    DivisionByZero,

    #[error("automorphism `inv` is only defined over GF(4)")]
    AutomorphismMismatch,

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("duplicate element `{0}`")]
    DuplicateElement(String),

    #[error("subset is not contained in the ground set")]
    NotASubset,

    #[error("ground set has {0} elements, at most 64 are supported")]
    GroundTooLarge(usize),

    #[error("principal submatrix on {{{}}} is singular", .0.join(" "))]
    SingularPivot(Vec<String>),

    #[error("invalid pivot: {0}")]
    InvalidPivot(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("set system is not proper (empty family)")]
    Improper,

    #[error("{op} is limited to ground sets of at most {max} elements, got {n}")]
    Capacity { op: &'static str, n: usize, max: usize },

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("{{{}}} is not a basis", .0.join(" "))]
    NotABasis(Vec<String>),

    #[error("operation requires a matroid representation")]
    MissingRepresentation,

    #[error("operation requires a binary representation")]
    NotBinary,

    #[error("not a delta-matroid: {0}")]
    NotDeltaMatroid(String),

    #[error("input is not vf-safe: {0}")]
    NotVfSafe(String),

    #[error("set system does not come from a graph: {0}")]
    NotGraphic(String),

    #[error("weights a and b must be nonzero")]
    ZeroWeight,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}
