use thiserror::Error;

/// Errors surfaced by the arithmetic and verification layers.
///
/// `NotDivisible` deserves a note: it is raised when a quantity the underlying
/// congruence claims is divisible by p turns out not to be. During a
/// theorem-status check that means an implementation bug; it is never
/// swallowed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{p} is not an odd prime")]
    NotOddPrime { p: u64 },
    #[error("exponent {e} is outside the supported range 1..=4")]
    ExponentOutOfRange { e: u32 },
    #[error("{p}^{e} exceeds the 2^62 modulus cap")]
    ModulusTooLarge { p: u64, e: u32 },
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },
    #[error("{value} (mod {modulus}) is not divisible by {p}^{k}")]
    NotDivisible { value: u64, p: u64, k: u32, modulus: u64 },
    #[error("prefix length {n_max} requires division by a multiple of p = {p}")]
    IndexTooLarge { n_max: usize, p: u64 },
    #[error("unsupported quadratic form {a}*x^2 + {b}*y^2")]
    UnsupportedForm { a: u64, b: u64 },
    #[error("check {check} is not applicable at p = {p}")]
    NotApplicable { check: String, p: u64 },
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
