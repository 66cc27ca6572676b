use thiserror::Error;

/// Errors raised by the library. Mathematical negatives that are part of a
/// normal answer (no solution, unknown decision) are not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails at basis element {0}")]
    UnitLaw(usize),
    #[error("invalid Wedderburn-Malcev data: {0}")]
    InvalidWmData(String),
    #[error("block list is empty or contains a zero block")]
    EmptyBlockList,
    #[error("algebra is not semisimple (radical has dimension {0})")]
    NotSemisimple(usize),
    #[error("bimodule action law violated: {0}")]
    ActionLawViolation(String),
    #[error("element does not lie in the radical")]
    NotInRadical,
    #[error("left and right operators do not commute")]
    NonCommutingOperators,
    #[error("matrix has nonzero trace {0}")]
    NonzeroTrace(String),
    #[error("algebra is not generalized block-triangular in the given block order")]
    NotGbt,
    #[error("element has nonzero multitrace {0}")]
    NonzeroMultitrace(String),
    #[error("polynomial x*y coefficients are both zero")]
    DegeneratePolynomial,
    #[error("matrix is singular")]
    Singular,
    #[error("element is not in the span of the given basis")]
    NotInSpan,
    #[error("factorization failed verification")]
    VerificationFailed,
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
