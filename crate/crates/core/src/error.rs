use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has degree zero (or is zero)")]
    DegreeZero,
    #[error("irreducibility cannot be decided over {0}; pass the assume-irreducible flag")]
    IrreducibilityUnsupported(String),
    #[error("polynomial is reducible")]
    Reducible,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("not a permutation of 0..{0}")]
    BadPermutation(usize),
    #[error("first-kind form requires a separable polynomial")]
    NonSeparableFirstKind,
    #[error("partition is not sorted in nonincreasing order")]
    NotSortedDescending,
    #[error("partition has a part that is not positive")]
    NonPositivePart,
    #[error("kernel dimension {0} is not a multiple of deg(p) = {1}")]
    NotMultipleOfS(usize, usize),
    #[error("coupled block equation has no solution")]
    NoSolution,
    #[error("dimension formulas disagree: {0} vs {1}")]
    FormulaMismatch(usize, usize),
    #[error("matrix does not commute with the canonical form")]
    NotInCentralizer,
    #[error("primary components share a factor; polynomials are not coprime")]
    NotCoprime,
    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix of size {n} exceeds the oracle cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
