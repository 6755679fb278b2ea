use thiserror::Error;

/// Why a decoder gave up on a received word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureCause {
    /// `P / W` (or `Q / (W·Λ)`) left a nonzero remainder.
    DivisionInexact,
    /// The recovered message has degree ≥ k, the locator exceeds its cap,
    /// or there are too many erasures to decode at all.
    DegreeOverflow,
    /// Re-encoding disagrees with the received word at a position that is
    /// neither erased nor a root of the error locator.
    LocatorMismatch,
    /// Two or more codewords are nearest to the received word (oracle only).
    Ambiguous,
}

impl std::fmt::Display for FailureCause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FailureCause::DivisionInexact => "division inexact",
            FailureCause::DegreeOverflow => "degree overflow",
            FailureCause::LocatorMismatch => "locator mismatch",
            FailureCause::Ambiguous => "ambiguous nearest codeword",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} outside supported range 3..=16")]
    UnsupportedDegree(u32),

    #[error("polynomial {poly:#x} is not a primitive polynomial of degree {m}")]
    NotPrimitive { m: u32, poly: u32 },

    #[error("value {value} is not an element of GF(2^{m})")]
    ElementOutOfRange { value: u32, m: u32 },

    #[error("inverse of zero")]
    InverseOfZero,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("expected length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("polynomial degree {degree} must be below {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error("position {position} out of range for block length {n}")]
    PositionOutOfRange { position: usize, n: usize },

    #[error("duplicate position {0}")]
    DuplicatePosition(usize),

    #[error("locator does not divide x^n - 1")]
    NotCyclotomicDivisor,

    #[error("invalid code parameters: {0}")]
    InvalidParams(String),

    #[error("malformed key equation problem: {0}")]
    MalformedProblem(String),

    #[error("code has {0} codewords; too many to enumerate, use the property tests instead")]
    CodeTooLarge(u64),

    #[error("channel asks for {requested} corrupted positions but the block has {n}")]
    ChannelOverflow { requested: usize, n: usize },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("decoding failed: {0}")]
    Decode(FailureCause),
}

pub type Result<T> = std::result::Result<T, Error>;
