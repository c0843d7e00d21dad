use thiserror::Error;

/// Errors raised anywhere in the engine.
///
/// Variants from `NotAnInteger` down signal an internal inconsistency (a bug in
/// a formula or in the character table), not bad user input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is even; q must be an odd prime power")]
    EvenCharacteristic(u64),
    #[error("exponent must be at least 1, got {0}")]
    BadExponent(u32),
    #[error("q must be an odd prime power, got {0}")]
    NotPrimePower(u64),
    #[error("q = {0} exceeds the supported maximum 65535")]
    FieldTooLarge(u64),
    #[error("operands belong to different fields (q = {left} vs q = {right})")]
    ParamMismatch { left: u32, right: u32 },
    #[error("principal series needs two distinct characters, got ({0}, {0})")]
    DegeneratePrincipalSeries(u32),
    #[error("cuspidal label {0} is decomposable (divisible by q+1)")]
    DecomposableCuspidalLabel(u32),
    #[error("malformed label `{0}`")]
    LabelParse(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("cyclotomic moduli differ ({0} vs {1})")]
    ModulusMismatch(u32, u32),
    #[error("extraction precision exceeded: need P > {needed}, have P = {prime}")]
    PrecisionExceeded { needed: u128, prime: u64 },
    #[error("value is not a rational integer within bound {bound} (residues {first} / {second})")]
    NotAnInteger {
        bound: u64,
        first: i128,
        second: i128,
    },
    #[error("negative multiplicity {mult} for {label}")]
    NegativeMultiplicity { label: String, mult: i64 },
    #[error("dimension mismatch: expected {expected}, constituents sum to {actual}")]
    DimensionMismatch { expected: u64, actual: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
