use thiserror::Error;

/// Errors surfaced by the kernel. Every operation that can fail returns
/// one of these instead of panicking, so the CLI can map failures to
/// exit codes.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid ring declaration: {0}")]
    InvalidRing(String),

    #[error("the ideal is the unit ideal")]
    UnitIdeal,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("sequence element `{0}` lies outside the conductor ideal Q")]
    NotInConductor(String),

    #[error("expected exactly {expected} conductor generators, got {got}")]
    WrongGeneratorCount { expected: usize, got: usize },

    #[error("auxiliary elements do not form a regular sequence with the conductor generator")]
    InvalidAux,

    #[error("vector has rank {got}, semigroup has ambient rank {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
