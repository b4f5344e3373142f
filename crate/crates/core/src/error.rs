use thiserror::Error;

/// Errors shared across the library. Domain failures map to CLI exit code 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("cycle detected: `{0}` and `{1}` are mutually comparable")]
    CycleDetected(String, String),
    #[error("operands have different parent posets")]
    MismatchedParent,
    #[error("poset is not connected")]
    NotConnected,
    #[error("poset has a single element")]
    Singleton,
    #[error("degree {degree} out of range (top degree {top})")]
    DegreeOutOfRange { degree: usize, top: isize },
    #[error("cochain has no value on chain {0}")]
    MissingValue(String),
    #[error("value on chain {0} is not a unit")]
    NotAUnit(String),
    #[error("not a cocycle")]
    NotACocycle,
    #[error("operation needs a concrete field; symbolic fields answer structural queries only")]
    SymbolicFieldUnsupported,
    #[error("cochain is not multiplicative on its support")]
    NotMultiplicative,
    #[error("action table does not arise from a thin representation")]
    NotClosed,
    #[error("zero representation")]
    ZeroRep,
    #[error("representation is not indecomposable")]
    NotIndecomposable,
    #[error("automorphism does not fix the cohomology class")]
    ClassNotFixed,
    #[error("malformed basis: {0}")]
    MalformedBasis(String),
    #[error("not a meet-semilattice: elements `{x}` and `{y}` have no infimum")]
    NotMeetSemilattice { x: String, y: String },
    #[error("input size {size} exceeds limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
}

pub type Result<T> = std::result::Result<T, Error>;
