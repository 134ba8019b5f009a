use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Rank out of range for the family.
    InvalidType { family: char, rank: usize },
    DimensionMismatch { expected: usize, found: usize },
    IndexOutOfRange { index: usize, len: usize },
    ZeroWeight,
    NonIntegralWeight,
    OrthogonalWeights,
    /// A group or orbit is larger than the configured cap.
    ResourceLimit { what: &'static str, size: u128, limit: u128 },
    /// Integer coordinates left the range of the fixed-width fast path.
    Overflow,
    /// No single shift makes the Kanev matrix integral.
    NonIntegralShift,
    /// N came out non-integral or non-positive.
    NonIntegralExponent(String),
    /// An identity that must hold exactly did not.
    IdentityFailed(String),
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidType { family, rank } => write!(f, "invalid Lie type {family}{rank}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range (1..={len})")
            }
            Error::ZeroWeight => f.write_str("weight must be nonzero"),
            Error::NonIntegralWeight => f.write_str("weight must have integer coordinates"),
            Error::OrthogonalWeights => f.write_str("weights are orthogonal"),
            Error::ResourceLimit { what, size, limit } => {
                write!(f, "{what} of size {size} exceeds limit {limit}")
            }
            Error::Overflow => f.write_str("integer overflow in fixed-width arithmetic"),
            Error::NonIntegralShift => f.write_str("no rational shift makes the correspondence integral"),
            Error::NonIntegralExponent(v) => write!(f, "exponent {v} is not a positive integer"),
            Error::IdentityFailed(what) => write!(f, "identity failed: {what}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
