use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("valuation of zero undefined")]
    ValuationOfZero,
    #[error("shift exceeds second part ({shift} > {lam2})")]
    ShiftExceedsSecondPart { shift: u64, lam2: u64 },
    #[error("incomparable sizes ({0} vs {1})")]
    IncomparableSizes(u64, u64),
    #[error("alpha, beta must share parity")]
    ParityMismatch,
    #[error("decomposition number arguments must be positive")]
    NonPositiveArgument,
    #[error("simplicity criterion requires 2-regular label")]
    SingularLabel,
    #[error("module has no unique composition series")]
    NotUniserial,
    #[error("even hook Specht module is indecomposable (n = {0})")]
    EvenHook(u64),
    #[error("{0} is not a prime (or 0)")]
    NotPrime(u64),
    #[error("not a partition: ({0},{1}) requires first part >= second part")]
    InvalidPartition(u64, u64),
    #[error("hook arm must be at least 1")]
    InvalidHook,
    #[error("value {0} exceeds the supported range 2^63 - 1")]
    OutOfRange(u64),
    #[error("ambient shift {shift} does not fit inside {label}")]
    ShiftOverflow { shift: u64, label: String },
    #[error("cannot parse {0:?}")]
    Parse(String),
}
