use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("odd label {label} on edge {a}-{b}")]
    OddLabel { a: String, b: String, label: u64 },
    #[error("label {label} on edge {a}-{b} is smaller than 2")]
    LabelTooSmall { a: String, b: String, label: u64 },
    #[error("loop at vertex {0}")]
    Loop(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("edge endpoint {0} is not a declared vertex")]
    DanglingEndpoint(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("invalid vertex name {0:?}")]
    InvalidName(String),
    #[error("vertex name collision: {0}")]
    NameCollision(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("relator exponent must be at least 1, got {0}")]
    BadExponent(i64),
    #[error("generators of a braid relator must differ ({0})")]
    SameGenerator(String),
    #[error("subgroup index must be at least {min}, got {got}")]
    BadIndex { min: u32, got: u32 },
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("abelianization has torsion (invariant factor {0})")]
    Torsion(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("expected a monomial")]
    NotMonomial,
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("conductor must be positive, got {0}")]
    BadConductor(i64),
    #[error("order {order} out of range 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("torus is empty")]
    Empty,
    #[error("torus has {0} components; pick one")]
    Reducible(usize),
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("witness list {0} is empty")]
    EmptyWitness(u8),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("no forbidden pattern found in factor {0}")]
    NoPattern(String),
    #[error("obstruction witness failed verification: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}
