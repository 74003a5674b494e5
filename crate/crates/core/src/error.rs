use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex label `{0}` in facet")]
    UnknownLabel(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("vertex `{0}` does not occur in any facet")]
    IsolatedLabel(String),
    #[error("facet list is empty; use the explicit void or irrelevant constructors")]
    EmptyFacetList,
    #[error("vertex index {index} out of range for a complex with {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },
    #[error("join operands share the label `{0}`")]
    OverlappingLabels(String),
    #[error("vertex sets must be nonempty and disjoint")]
    InvalidPair,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported bound 2^61")]
    PrimeTooLarge(u64),
    #[error("prime set is empty")]
    EmptyPrimeSet,
    #[error("parameter N must be at least 1")]
    InvalidParameter,
    #[error("{0} vertices exceed the subset-enumeration limit of {1}")]
    TooManyVertices(usize, usize),
    #[error("invalid scope entry: {0}")]
    InvalidScope(String),
    #[error("simplex {0} cannot be added: {1}")]
    InvalidAddition(String, &'static str),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
