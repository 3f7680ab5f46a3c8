use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("too many vertices: {0} (at most {max})", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("duplicate vertex label {0}")]
    DuplicateVertex(u32),
    #[error("vertex {0} is not in the vertex set")]
    UnknownVertex(u32),
    #[error("face budget exceeded: more than {0} faces")]
    FaceBudget(usize),
    #[error("complex is not flag (missing face {0:?})")]
    NotFlag(Vec<u32>),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("cycle length {0} is below 4")]
    CycleTooShort(u32),
    #[error("invalid sphere product: {0}")]
    InvalidSphereProduct(String),
    #[error("invalid differential: {0}")]
    InvalidDifferential(String),
    #[error("relator word is not freely reduced at position {0}")]
    UnreducedWord(usize),
    #[error("invalid relator: {0}")]
    InvalidRelator(String),
    #[error("truncation {0} is too large")]
    TruncationTooLarge(usize),
    #[error("integer overflow in series arithmetic at degree {0}")]
    SeriesOverflow(usize),
    #[error("monomial basis in degree {degree} exceeds budget of {budget} words")]
    BasisBudget { degree: usize, budget: usize },
    #[error("vertex count {0} is outside the supported sweep range")]
    SweepRange(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("integer overflow")]
    Overflow,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
