use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero polynomial.
    ZeroDivisor,
    /// gcd(0, 0) has no normalized representative.
    BothZero,
    /// `t` is not invertible modulo `m`.
    NonInvertibleT { t: i64, m: u64 },
    /// Malformed polynomial or braid text. `pos` is a byte offset.
    Syntax { pos: usize, msg: String },
    EmptyInput,
    /// A generator index outside `1..strands`.
    IndexOutOfRange { index: i64, strands: usize },
    NotSquare { rows: usize, cols: usize },
    DimensionMismatch,
    ZeroModulus,
    /// The modulus is `±t^k`, so the quotient ring is trivial.
    UnitModulus,
    /// A value was assigned to a pivot column during back-substitution.
    InconsistentAssignment { col: usize },
    /// The operation requires a different Alexander-polynomial verdict.
    WrongVerdict,
    /// The modulus does not divide the Alexander polynomial.
    NotADivisor,
    LengthMismatch { expected: usize, found: usize },
    BudgetExceeded { needed: u128, budget: u64 },
    /// A step that cannot fail for valid inputs did fail.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDivisor => write!(f, "division by zero polynomial"),
            Error::BothZero => write!(f, "gcd of two zero polynomials is undefined"),
            Error::NonInvertibleT { t, m } => write!(f, "t = {t} is not invertible modulo {m}"),
            Error::Syntax { pos, msg } => write!(f, "syntax error at offset {pos}: {msg}"),
            Error::EmptyInput => write!(f, "empty input"),
            Error::IndexOutOfRange { index, strands } => {
                write!(f, "generator index {index} out of range for {strands} strands")
            }
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::DimensionMismatch => write!(f, "matrix dimensions do not match"),
            Error::ZeroModulus => write!(f, "modulus must be nonzero"),
            Error::UnitModulus => write!(f, "modulus is a unit; the quotient ring is trivial"),
            Error::InconsistentAssignment { col } => {
                write!(f, "column {col} is a pivot column and cannot be assigned")
            }
            Error::WrongVerdict => write!(f, "operation not applicable to this Alexander polynomial"),
            Error::NotADivisor => write!(f, "modulus does not divide the Alexander polynomial"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration needs {needed} candidates, budget is {budget}")
            }
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
