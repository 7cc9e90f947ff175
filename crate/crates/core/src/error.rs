use thiserror::Error;

use crate::textio::ParseError;

/// Errors raised by the word and braid operations.
///
/// Arithmetic outcomes (a braid check answering "no") are never errors; these
/// variants cover malformed input and resource limits only.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index must be at least 1")]
    ZeroIndex,
    #[error("exponent of x{index} overflowed the 64-bit range")]
    ExponentOverflow { index: usize },
    #[error("free word reached {len} syllables, exceeding the cap of {cap}")]
    SyllableCap { len: usize, cap: usize },
    #[error("compressed image length overflowed the 64-bit range")]
    LengthOverflow,
    #[error("braid word contains no sigma1 or contains sigma1^-1")]
    NotSigma1Positive,
    #[error("at least one right-hand argument is required")]
    EmptyBetas,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    /// True for failures caused by resource limits rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::SyllableCap { .. } | Error::ExponentOverflow { .. } | Error::LengthOverflow
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
