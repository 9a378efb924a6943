use core::fmt;

use num_bigint::BigUint;

/// Errors produced by the library.
///
/// Resource guards (`*CapExceeded`) protect against accidentally requesting
/// an enumeration or table far larger than intended; every capped operation
/// has a `_with_cap` variant that accepts an explicit limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A partition enumeration would produce more elements than the cap.
    EnumerationCapExceeded { required: BigUint, cap: u64 },
    /// A `2^n` word or outcome expansion was requested with `n` above the cap.
    ExpansionCapExceeded { n: usize, cap: usize },
    /// A full pmf table was requested for `n` above the cap.
    TableCapExceeded { n: usize, cap: usize },
    /// Partition parts are not weakly decreasing.
    PartsNotDecreasing,
    /// A partition part exceeds the declared bound.
    PartExceedsBound { part: u32, bound: u32 },
    /// A partition does not fit the box required by the operation
    /// (at most `max_parts` parts, each at most `bound`).
    PartitionOutsideBox { max_parts: usize, bound: u32 },
    /// A probability value lies outside `[0, 1]`.
    ProbabilityOutOfRange,
    /// The success probability must satisfy `0 < pi < 1` strictly.
    SuccessProbabilityOutOfRange,
    /// The requested conditioning event has probability zero.
    ZeroProbabilityCondition,
    /// A 1-based position lies outside the word.
    PositionOutOfRange { position: usize, len: usize },
    /// The operation requires a nonempty word.
    EmptyWord,
    /// A character other than `F`/`S` appeared in a word string.
    InvalidSymbol { found: char },
    /// Miscellaneous argument violation, described by the message.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EnumerationCapExceeded { required, cap } => write!(
                f,
                "enumeration of {required} partitions exceeds the cap of {cap}"
            ),
            Error::ExpansionCapExceeded { n, cap } => {
                write!(f, "2^{n} expansion exceeds the cap n <= {cap}")
            }
            Error::TableCapExceeded { n, cap } => {
                write!(f, "pmf table for n = {n} exceeds the cap n <= {cap}")
            }
            Error::PartsNotDecreasing => {
                write!(f, "partition parts must be weakly decreasing")
            }
            Error::PartExceedsBound { part, bound } => {
                write!(f, "partition part {part} exceeds the bound {bound}")
            }
            Error::PartitionOutsideBox { max_parts, bound } => write!(
                f,
                "partition does not fit in the box of at most {max_parts} parts, each at most {bound}"
            ),
            Error::ProbabilityOutOfRange => {
                write!(f, "probability must lie in [0, 1]")
            }
            Error::SuccessProbabilityOutOfRange => {
                write!(f, "success probability must satisfy 0 < pi < 1")
            }
            Error::ZeroProbabilityCondition => {
                write!(f, "conditioning event has probability zero")
            }
            Error::PositionOutOfRange { position, len } => {
                write!(f, "position {position} is outside the word of length {len}")
            }
            Error::EmptyWord => write!(f, "word must be nonempty"),
            Error::InvalidSymbol { found } => {
                write!(f, "invalid symbol {found:?}; expected 'F' or 'S'")
            }
            Error::InvalidArgument(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for Error {}
