//! Errors of the cochain-complex computations.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("differential on block ({n}, {j}) produces {pair}, longer than the length bound")]
    TruncationOverflow { n: usize, j: i64, pair: String },
    #[error("block ({n}, {j}) is not certified: ℬ in internal degree {j} is not captured by the length bound (lower bound only)")]
    TruncationUnsound { n: usize, j: i64 },
    #[error("cochain is not a cocycle of block ({n}, {j})")]
    NotACocycle { n: usize, j: i64 },
    #[error("cochain does not live in block ({n}, {j})")]
    WrongBlock { n: usize, j: i64 },
    #[error("cochain of block ({n}, {j}) is outside the computed window")]
    OutsideWindow { n: usize, j: i64 },
    #[error("gentle companion mismatch at ({n}, {j}): dim HH(A′) = {companion}, dim HH(A) = {skew}, dim V_sp = {vsp}")]
    CompanionMismatch {
        n: usize,
        j: i64,
        skew: usize,
        companion: usize,
        vsp: usize,
    },
    #[error("gentle companion mismatch in total degree {total}: dim HH(A′) = {companion}, dim HH(A) = {skew}, dim V_sp = {vsp}")]
    TotalDegreeMismatch {
        total: i64,
        skew: usize,
        companion: usize,
        vsp: usize,
    },
}
