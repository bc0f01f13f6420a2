use thiserror::Error;

use crate::exact::Rational;
use crate::parser::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in the library.
///
/// The CLI maps `Parse` (syntax) to exit code 1, `InvariantViolation` to exit
/// code 3, and every other variant to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
    #[error("exponent {0} is out of range")]
    ExponentOutOfRange(i64),
    #[error("root of a negative integer {0}")]
    NegativeRootArgument(String),
    #[error("root index must be at least 1")]
    ZeroRootIndex,
    #[error("radicand must be positive, got {0}")]
    NonPositiveRadicand(Rational),
    #[error("index {index} is below the minimum {min} for this operation")]
    IndexTooSmall { index: u32, min: u32 },
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("radical root({radicand},{index}) is reducible")]
    ReducibleBase { radicand: Rational, index: u32 },
    #[error("power basis elements have different bases")]
    BaseMismatch,
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateCount { expected: usize, got: usize },
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial degree {degree} is not below the radical index {index}")]
    DegreeTooHigh { degree: usize, index: u32 },
    #[error("the coefficient of the radical must be nonzero")]
    ZeroRadicalCoefficient,
    #[error("radical root({radicand},{index}) has a rational value")]
    RationalValuedRadical { radicand: Rational, index: u32 },
    #[error("expression has {0} radical terms, at most one is allowed here")]
    TooManyTerms(usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
