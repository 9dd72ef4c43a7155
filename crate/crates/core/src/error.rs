use thiserror::Error;

/// Errors raised while reading theories, grounding, and decoding models.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("symbol `{name}` used with arity {first} and {second}")]
    ArityConflict {
        name: String,
        first: usize,
        second: usize,
    },

    #[error("symbol `{name}` has unsupported arity {arity} (maximum is 3)")]
    UnsupportedArity { name: String, arity: usize },

    #[error("symbol `{0}` used both as a function and as a relation")]
    KindConflict(String),

    #[error("signature needs at least one symbol of arity >= 1")]
    DegenerateSignature,

    #[error("domain size {0} is out of range (expected 2..=253)")]
    DomainSize(usize),

    #[error("numeral {numeral} is not an element of a domain of size {n}")]
    NumeralOutOfRange { numeral: u8, n: usize },

    #[error("clause has {0} distinct variables (at most 6 are grounded)")]
    TooManyVariables(usize),

    #[error("grounding would produce {0} literals (limit is 10^8)")]
    GroundingOverflow(u128),

    #[error("malformed encoding: {0}")]
    Encoding(String),

    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),

    #[error("permutation is invalid: {0}")]
    Permutation(String),

    #[error("line {line}: {msg}")]
    Record { line: usize, msg: String },

    #[error("brute-force canonicalization needs n <= 8, got {0}")]
    OracleGuard(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
