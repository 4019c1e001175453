//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong while building rings, ideals, spaces or
/// running the claim suite. Witness data is kept as plain strings so errors
/// can be surfaced verbatim in reports and CLI output.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ring axiom violated: {law} at ({a}, {b}, {c})")]
    AxiomViolation {
        law: &'static str,
        a: usize,
        b: usize,
        c: usize,
    },
    #[error("{0} is not prime")]
    NonPrimeModulus(usize),
    #[error("polynomial must be monic of degree >= 1 with coefficients in 0..p")]
    BadPolynomial,
    #[error("carrier size {size} exceeds cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("ideal count exceeds cap {cap}")]
    IdealCapExceeded { cap: usize },
    #[error("filter/lattice enumeration exceeds cap {cap} (size {size})")]
    FilterCapExceeded { size: usize, cap: usize },
    #[error("malformed table ring: {0}")]
    BadTable(String),
    #[error("element index {index} out of range for ring of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("homomorphism law violated: {law} at ({a}, {b})")]
    HomViolation { law: &'static str, a: usize, b: usize },
    #[error("subset is not closed under {op}: witness ({a}, {b})")]
    NotClosed { op: &'static str, a: usize, b: usize },
    #[error("subset does not contain the unity of the ambient ring")]
    MissingUnity,
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("colon ideal requires a nonempty divisor set")]
    EmptyColonSet,
    #[error("multiplicative set is invalid: {0}")]
    BadMultSet(String),
    #[error("operation requires a proper ideal")]
    ImproperIdeal,
    #[error("invalid prime index {0} for this spectrum")]
    BadPrimeIndex(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("quotient transport requires the ideal to sit inside k(Y)")]
    IdealNotInKernel,
    #[error("internal disagreement between independent computations: {0}")]
    InternalDisagreement(String),
    #[error("unknown claim id {0}")]
    UnknownClaim(String),
    #[error("claim {claim} has no hypothesis named {hypothesis}")]
    UnknownHypothesis { claim: String, hypothesis: String },
    #[error("invalid caps spec: {0}")]
    BadCaps(String),
}

pub type Result<T> = std::result::Result<T, Error>;
