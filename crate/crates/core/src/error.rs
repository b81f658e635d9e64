//! Error type shared by all modules of the crate.

use std::fmt;

/// Errors raised by the exact-arithmetic and classification routines.
///
/// Every variant has a stable machine-readable [`name`](Error::name); the
/// command-line tool prints that name and exits with status 1 on any
/// mathematical domain error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Polynomial division by the zero polynomial.
    DivisionByZero,
    /// Polynomial division left a nonzero remainder where an exact quotient
    /// was required.
    InexactDivision(String),
    /// An argument was outside the documented domain of the operation.
    OutOfRange(String),
    /// A multiplicative order (or a formula built on one) was requested for
    /// a base not coprime to the modulus.
    NotCoprime { base: u64, modulus: u64 },
    /// A quadratic character defined on odd residues was evaluated at an
    /// even integer.
    EvenArgument(i64),
    /// Two cyclotomic elements at different levels were combined without an
    /// explicit embedding.
    LevelMismatch { left: u64, right: u64 },
    /// An embedding of a cyclotomic element was requested into a level that
    /// its own level does not divide.
    NotDivisible { level: u64, target: u64 },
    /// A cyclotomic element was expected to lie in Z + Z*root but no integer
    /// pair reproduces it.
    NotInQuadraticSubring(String),
    /// Arguments violate a structural precondition (wrong parity, zero where
    /// nonzero is required, and so on).
    BadArguments(String),
    /// A square-root scaling was requested that does not produce integer
    /// coefficients.
    NonIntegralScaling(String),
    /// A prime was required.
    NotPrime(u64),
    /// The brute-force Weil search only supports dimensions 1 and 2.
    UnsupportedDegree(u32),
    /// A degree-2g polynomial was required but an odd degree was supplied.
    OddDegree(usize),
    /// The numeric root finder did not converge within its iteration cap.
    NoConvergence(String),
}

impl Error {
    /// Stable variant name, used verbatim in CLI error output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::InexactDivision(_) => "InexactDivision",
            Error::OutOfRange(_) => "OutOfRange",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::EvenArgument(_) => "EvenArgument",
            Error::LevelMismatch { .. } => "LevelMismatch",
            Error::NotDivisible { .. } => "NotDivisible",
            Error::NotInQuadraticSubring(_) => "NotInQuadraticSubring",
            Error::BadArguments(_) => "BadArguments",
            Error::NonIntegralScaling(_) => "NonIntegralScaling",
            Error::NotPrime(_) => "NotPrime",
            Error::UnsupportedDegree(_) => "UnsupportedDegree",
            Error::OddDegree(_) => "OddDegree",
            Error::NoConvergence(_) => "NoConvergence",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "DivisionByZero: division by the zero polynomial"),
            Error::InexactDivision(d) => write!(f, "InexactDivision: {d}"),
            Error::OutOfRange(d) => write!(f, "OutOfRange: {d}"),
            Error::NotCoprime { base, modulus } => {
                write!(f, "NotCoprime: {base} is not coprime to {modulus}")
            }
            Error::EvenArgument(a) => {
                write!(f, "EvenArgument: quadratic character undefined at even {a}")
            }
            Error::LevelMismatch { left, right } => {
                write!(f, "LevelMismatch: cyclotomic levels {left} and {right} differ")
            }
            Error::NotDivisible { level, target } => {
                write!(f, "NotDivisible: level {level} does not divide {target}")
            }
            Error::NotInQuadraticSubring(d) => write!(f, "NotInQuadraticSubring: {d}"),
            Error::BadArguments(d) => write!(f, "BadArguments: {d}"),
            Error::NonIntegralScaling(d) => write!(f, "NonIntegralScaling: {d}"),
            Error::NotPrime(n) => write!(f, "NotPrime: {n} is not prime"),
            Error::UnsupportedDegree(g) => {
                write!(f, "UnsupportedDegree: brute-force search supports g <= 2, got {g}")
            }
            Error::OddDegree(d) => write!(f, "OddDegree: expected even degree, got {d}"),
            Error::NoConvergence(d) => write!(f, "NoConvergence: {d}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
