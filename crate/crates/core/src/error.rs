use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A curve with no points.
    EmptyCurve,
    /// Points (or curves) of different dimension were combined.
    DimensionMismatch { expected: usize, found: usize },
    /// A zero-dimensional point was supplied.
    ZeroDimension,
    /// A coordinate or distance was NaN or infinite.
    NonFinite,
    /// A precomputed distance was negative.
    NegativeDistance,
    /// A precomputed matrix had rows of different length or no entries.
    RaggedMatrix,
    /// `s > t` or a negative limit.
    InvalidRange,
    /// A value that is not one of the ladder's distances.
    UnknownValue,
    /// A range outside the view a contracted decider was built for.
    ContractViolation,
    /// An internal invariant failed; indicates a bug.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyCurve => f.write_str("curve has no points"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ZeroDimension => f.write_str("points must have at least one coordinate"),
            Error::NonFinite => f.write_str("non-finite coordinate or distance"),
            Error::NegativeDistance => f.write_str("negative distance in matrix"),
            Error::RaggedMatrix => {
                f.write_str("distance matrix rows differ in length or are empty")
            }
            Error::InvalidRange => f.write_str("invalid distance range (need 0 <= s <= t)"),
            Error::UnknownValue => f.write_str("value is not a ladder distance"),
            Error::ContractViolation => {
                f.write_str("range is not a cell of the view this decider was contracted for")
            }
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
