use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exact quotient does not exist")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable count mismatch: {left} vs {right}")]
    VarMismatch { left: usize, right: usize },
    #[error("variable x{0} occurs but has no assigned value")]
    UnassignedVariable(usize),
    #[error("constant term of the series is not 1")]
    NonUnitConstantTerm,
    #[error("result is not a Laurent polynomial in p")]
    NotLaurent,
    #[error("signature has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("signature parts must be non-increasing")]
    NotNonIncreasing,
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("polynomial is not symmetric in x1..xn")]
    NotSymmetric,
    #[error("polynomial is not homogeneous in x0")]
    NotHomogeneous,
    #[error("rank {rank} is invalid for matrices of order {order}")]
    InvalidRank { rank: usize, order: usize },
    #[error("coset enumeration needs {candidates} candidates, limit is {limit}")]
    EnumerationTooLarge { candidates: u128, limit: u128 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("coefficient of v^{0} does not vanish")]
    NonVanishingTail(usize),
    #[error("truncation order {order} is below the required {min}")]
    OrderTooSmall { order: usize, min: usize },
    #[error("identity check failed: {0}")]
    Mismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("linear system has rank {rank} < {unknowns} unknowns")]
    NonUniqueSolution { rank: usize, unknowns: usize },
    #[error("functional equation fails at index {0}")]
    FunctionalEquationViolated(usize),
    #[error("genus {0} is not supported here")]
    UnsupportedGenus(usize),
    #[error("no method named {0:?}")]
    UnknownMethod(String),
    #[error("a concrete prime is required for this method")]
    MissingPrime,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}
