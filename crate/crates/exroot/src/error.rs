use std::fmt;

/// Errors produced by the root-extraction toolkit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An exponent below 2 was supplied; every root algorithm here needs e >= 2.
    InvalidExponent { exponent: u32 },
    /// A block index outside `0..block_count` was requested.
    BlockIndexOutOfRange { index: usize, block_count: usize },
    /// A benchmark case violated its preconditions (zero repetitions, zero digits, ...).
    InvalidBenchCase { reason: String },
    /// Growth fitting needs at least three distinct input sizes per method group.
    InsufficientData { group: String, distinct_sizes: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidExponent { exponent } => {
                write!(f, "invalid exponent {exponent}: roots are defined for e >= 2")
            }
            Self::BlockIndexOutOfRange { index, block_count } => {
                write!(f, "block index {index} out of range for {block_count} blocks")
            }
            Self::InvalidBenchCase { reason } => write!(f, "invalid bench case: {reason}"),
            Self::InsufficientData { group, distinct_sizes } => write!(
                f,
                "insufficient data for growth fit of {group}: {distinct_sizes} distinct sizes, need at least 3"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
