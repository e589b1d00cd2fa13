//! The closed-form side of `HH*(A)` for a graded skew-gentle algebra `A`:
//! the basis classes `H_I … H_VIII`, the algebra generators `c1 … c5` and
//! relations, the cup product, the operations `∘ᵢ`, the Gerstenhaber
//! bracket, and their verification against the cochain-complex oracle.

pub mod basis;
pub mod circ;
pub mod cocycles;
pub mod cup;
pub mod error;
pub mod exceptional;
pub mod generators;
pub mod shape;
pub mod table;
pub mod verify;
pub mod window;

pub use basis::{closed_form_basis, closed_form_basis_with, ClassTag, GeneratorTag, Inventory, Payload};
pub use circ::{
    arrow_count, bracket, circ, circ_i, circ_i_pairs, circ_i_pairs_with, circ_pairs, deg_c, deg_c_pair,
    vee, GraftRule,
};
pub use cup::{cup, cup_in, cup_pairs};
pub use error::{StructureError, StructuredMismatch};
pub use generators::{algebra_generators, algebra_relations, presentation, Presentation, Relation};
pub use shape::{quiver_shape, OneLoopCase, QuiverShape};
pub use table::{expected_bracket, expected_circ, expected_cup, Entry, StructureConstantTable};
pub use verify::{basis_counts, verify_structure, CheckTally, VerificationReport, VerifyOptions, CHECKS};
pub use window::{Bounds, ClassBasis, CohomologyWindow};
