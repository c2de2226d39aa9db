//! Exact arithmetic in `F_q`, `q = p^k`.

mod element;
mod embed;
pub(crate) mod field;
mod tables;

pub use element::Fq;
pub use embed::FieldEmbedding;
pub use field::{is_prime, prime_power, FqField, MAX_CHARACTERISTIC};
pub use tables::FieldTables;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FfError {
    #[error("{0} is not a prime (or exceeds the supported characteristic)")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u128),
    #[error("modulus has degree {found}, expected {expected}")]
    ModulusDegree { expected: usize, found: usize },
    #[error("modulus must be monic")]
    ModulusNotMonic,
    #[error("modulus is reducible over the prime field")]
    ReducibleModulus,
    #[error("field order {p}^{k} does not fit in 128 bits")]
    OrderOverflow { p: u64, k: usize },
    #[error("expected {expected} coordinates, got {found}")]
    CoordinateCount { expected: usize, found: usize },
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("square roots in characteristic 2 are not supported")]
    EvenCharacteristic,
}
