//! Errors of the closed-form side.

use thiserror::Error;

use skewgentle_complex::ComplexError;

/// Failures of closed-form enumeration and structure verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    /// A power family of degree-0 cycles meets the block in infinitely many
    /// basis elements.
    #[error("infinite family of {class} classes in HH^({n},{j})")]
    InfiniteFamily { class: String, n: usize, j: i64 },
    /// Finitely many members exist, but some are longer than the bound.
    #[error("{class} classes in HH^({n},{j}) exceed path length {max_len}")]
    BeyondLengthBound {
        class: String,
        n: usize,
        j: i64,
        max_len: usize,
    },
    /// The block lies outside the verification window.
    #[error("block ({n}, {j}) is outside the window")]
    OutsideWindow { n: usize, j: i64 },
    /// The length bound does not certify the block.
    #[error("block ({n}, {j}) is not certified by the length bound")]
    Uncertified { n: usize, j: i64 },
    /// The general presentation does not apply to this quiver.
    #[error("exceptional quiver: {0}")]
    ExceptionalQuiver(String),
    /// A computed product or bracket disagrees with its expected value.
    #[error("{0}")]
    Mismatch(Box<StructuredMismatch>),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

impl StructureError {
    /// True for the errors that only signal the limits of a finite window
    /// (the check is skipped rather than failed).
    pub fn is_window_limit(&self) -> bool {
        matches!(
            self,
            StructureError::OutsideWindow { .. }
                | StructureError::Uncertified { .. }
                | StructureError::InfiniteFamily { .. }
                | StructureError::BeyondLengthBound { .. }
                | StructureError::Complex(
                    ComplexError::OutsideWindow { .. }
                        | ComplexError::TruncationUnsound { .. }
                        | ComplexError::TruncationOverflow { .. }
                )
        )
    }
}

/// A disagreement between a computed class and its expected value, with the
/// data needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredMismatch {
    /// Which check failed (e.g. `cup`, `bracket`, `jacobi`).
    pub check: String,
    /// The operands, rendered.
    pub operands: Vec<String>,
    /// The computed cochain, rendered.
    pub computed: String,
    /// The expected cochain, rendered.
    pub expected: String,
    /// Coordinates of `computed − expected` in the block's class basis, or
    /// the reason no reduction was possible.
    pub witness: String,
}

impl std::fmt::Display for StructuredMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} mismatch on [{}]: computed {} but expected {} ({})",
            self.check,
            self.operands.join(", "),
            self.computed,
            self.expected,
            self.witness
        )
    }
}
