//! The parallel-pair cochain complex `𝕂(Γ‖ℬ)` of a graded skew-gentle
//! algebra `A` (differential `d`) and of its gentle companion `A′`
//! (differential `δ`), with exact computation of the bigraded blocks
//! `HH^{n,j}` over the coefficient field.

pub mod cochain;
pub mod cohomology;
pub mod companion;
pub mod differential;
pub mod error;
pub mod linalg;

pub use cochain::{Cochain, ParallelPair};
pub use cohomology::{cohomology, Certificate, ClassCoordinates, CohomologyBlock};
pub use companion::{
    gentle_companion_check, gentle_companion_window, vsp_block, CompanionComparison, VspBlock,
};
pub use differential::{
    apply_differential, block_pairs, check_square_zero, differential, differential_of_pair,
    BlockPairs, DifferentialMatrix, PairIndex, SparseMatrix, Variant,
};
pub use error::ComplexError;
pub use linalg::{Reducer, Reduction, SparseVector};
