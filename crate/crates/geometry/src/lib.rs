//! The graded marked ribbon graph of a skew-gentle triple, the invariants
//! of its orbifold surface, combinatorial winding numbers, and the
//! correspondence between algebra generators of `HH*(A)` and boundary
//! components, punctures and `π₁` of the surface.

pub mod correspondence;
pub mod error;
pub mod ribbon;
pub mod surface;
pub mod winding;

pub use correspondence::{correspondence_check, CorrespondenceReport, Discrepancy, Pairing};
pub use error::GeometryError;
pub use ribbon::{Angle, GraphVertex, HalfEdge, RibbonGraph, VertexKind};
pub use surface::{faces, surface_invariants, Face, SurfaceModel};
pub use winding::{puncture_multiplier, winding_number, CurveClass};
