//! Structural errors shared across the crate.

use num_bigint::BigInt;
use thiserror::Error;

use crate::index::{Index, Rank};

/// Errors raised by element construction, arithmetic, quotients, and
/// homomorphisms. Expression parsing has its own error type in
/// [`crate::expr`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Binary operation on elements of different ranks.
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: Rank, right: Rank },

    /// Basis label out of range for the rank, or a triple label whose first
    /// two indices are out of order.
    #[error("invalid index {index} for rank {rank}")]
    InvalidIndex { index: Index, rank: Rank },

    /// Rank must be a positive integer.
    #[error("rank must be at least 1, got {value}")]
    InvalidRank { value: u32 },

    /// Quotient coefficients need `d(d-1)/2` to be well defined on residues,
    /// which requires 2 to be invertible. For an even modulus the lifts 0 and
    /// 2 of the residue 0 mod 2 already give the distinct values 0 and 1.
    #[error(
        "modulus {modulus} is even: d(d-1)/2 is not well-defined on residues \
         modulo an even integer (lifts 0 and 2 give 0 and 1)"
    )]
    EvenModulus { modulus: BigInt },

    /// Moduli below 3 give degenerate quotients and are rejected.
    #[error("modulus must be an odd integer >= 3, got {modulus}")]
    ModulusTooSmall { modulus: BigInt },

    /// A homomorphism needs exactly one image per generator.
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: u32, got: usize },

    /// Expression variable beyond the evaluation rank.
    #[error("variable x{var} exceeds rank {rank}")]
    VarOutOfRange { var: u32, rank: Rank },

    /// Only the literal 0 denotes an element (the common identity).
    #[error("integer literal {value} does not denote an element; only 0 does")]
    IntLiteral { value: BigInt },

    /// Malformed element JSON.
    #[error("invalid element JSON: {0}")]
    Json(String),
}
