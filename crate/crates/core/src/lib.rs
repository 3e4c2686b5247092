//! Exact integer group determinants for the semidihedral group of order 16
//! and its relatives (SD32, M16, M32, D8).
//!
//! Two independent determinant paths are provided: a brute-force oracle
//! (regular representation matrix + fraction-free Bareiss elimination) and
//! factored closed forms built from cyclotomic orbit norms. On top of those
//! sit an achievability classifier for arbitrary integers, a witness
//! constructor that produces a verified group-ring element for every
//! achievable value, and a census harness that sweeps coefficient boxes and
//! cross-checks everything it observes.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod census;
pub mod cyclotomic;
pub mod determinants;
pub mod group_ring;
pub mod number_theory;
mod rng;
pub mod witness;

pub use determinants::{regular_determinant, sd16_factored, GroupSpec};
pub use group_ring::GroupRingElement;
pub use number_theory::{classify, Verdict};
pub use witness::witness;

use num_bigint::BigInt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unsupported tower exponent n={0} (supported: 4, 5, 6)")]
    UnsupportedTower(u32),
    #[error("mismatched tower exponents: {0} vs {1}")]
    MismatchedTower(u32, u32),
    #[error("unsupported negacyclic ring degree m={0} (supported: 1, 2, 4, 8, 16)")]
    UnsupportedDegree(usize),
    #[error("mismatched ring degrees: {0} vs {1}")]
    MismatchedDegree(usize, usize),
    #[error("galois index {0} is not invertible mod {1}")]
    BadGaloisIndex(usize, usize),
    #[error("orbit product is not a scalar: {0}")]
    NonScalarProduct(String),
    #[error("coefficient vector has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(BigInt),
    #[error("{0} is not 3 mod 8")]
    BadResidue(BigInt),
    #[error("no representation U^2+2V^2 = {0}")]
    NoRepresentation(BigInt),
    #[error("{0} is not a multiple of 2^10")]
    NotMultipleOf1024(BigInt),
    #[error("bad witness prime {p} for target {n}")]
    BadPrime { n: BigInt, p: BigInt },
    #[error("{0} is not achievable")]
    NotAchievable(Verdict),
    #[error("witness verification failed for target {target}: oracle returned {got} on {element}")]
    VerificationFailed {
        target: BigInt,
        got: BigInt,
        element: String,
    },
    #[error("factored formula disagrees with oracle: {0}")]
    FormulaMismatch(String),
    #[error("invalid census config: {0}")]
    InvalidConfig(String),
    #[error("incompatible census reports: {0}")]
    IncompatibleReports(String),
}

pub type Result<T> = std::result::Result<T, Error>;
