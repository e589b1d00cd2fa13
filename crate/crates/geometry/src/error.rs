use thiserror::Error;

/// Failures of the ribbon-graph construction; each signals a construction
/// bug or an input outside the model (e.g. an isolated vertex).
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("edge {edge} has {count} half-edges instead of two")]
    EdgeValency { edge: String, count: usize },
    #[error("non-integral genus: χ = {euler}, b = {faces}")]
    NonIntegerGenus { euler: i64, faces: usize },
    #[error("the ribbon graph is disconnected")]
    Disconnected,
    #[error("{count} discrepancies between generators and the surface")]
    CorrespondenceMismatch { count: usize },
}
