//! Core data model for graded skew-gentle algebras: coefficient fields,
//! graded quivers, paths, validated triples `(Q, R, Sp)` and the normal form
//! onto the path basis `ℬ`.

pub mod algebra;
pub mod field;
pub mod path;
pub mod presets;
pub mod quiver;
pub mod random;
pub mod triple;

pub use algebra::{
    companion_normal_form, multiply, multiply_in, normal_form, reduce, reduce_product,
    AlgebraElement, AlgebraKind,
};
pub use field::{FieldError, FieldSpec, Scalar};
pub use path::{Path, PathError};
pub use quiver::{Arrow, ArrowId, Quiver, VertexId};
pub use triple::{
    validate_triple, RawArrow, RawPresentation, SkewGentleTriple, ValidationError,
    ValidationErrors,
};
