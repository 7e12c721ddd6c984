use thiserror::Error;

/// Errors raised by contract violations on caller-supplied inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid round count {0}: expected 6, 8 or 12")]
    InvalidRoundCount(u32),

    #[error("round index {0} out of range 0..=11")]
    RoundIndex(usize),

    #[error("{what} must be {expected} bytes, got {actual}")]
    InvalidLength {
        what: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("unsupported rate of {0} bytes: expected 8 or 16")]
    InvalidRate(usize),

    #[error("hex string has odd length {0}")]
    HexOddLength(usize),

    #[error("invalid hex character {character:?} at position {position}")]
    HexCharacter { character: char, position: usize },
}

/// Tag verification failed.
///
/// Deliberately carries no detail about where verification diverged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("authentication failed")]
pub struct AuthenticationFailure;
