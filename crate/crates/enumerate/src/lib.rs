//! The combinatorial inventory of a graded skew-gentle triple: the path
//! basis `ℬ`, the relation chains `Γₙ`, maximal elements, cocomplete and
//! complete circuits with their closure families, rotations, and a spanning
//! tree.

pub mod cycles;
pub mod maximal;
pub mod paths;
pub mod tree;

pub use cycles::{
    canonical_rotation, cycle_catalog, primitive_cocomplete, primitive_complete, rotate,
    srot_iterated, srot_pow, Circuit, CycleCatalog, CycleFamily, CycleKind, RotateError,
    RotationMode,
};
pub use maximal::{companion_maximal_paths, maximal_elements, MaximalElements};
pub use paths::{
    b_chain, b_paths_between, b_paths_of_length, chain_shape, enumerate_b, enumerate_gamma,
    gamma_chain, gamma_paths, long_b_path_exists, ChainShape, GammaPath,
};
pub use tree::{spanning_tree, SpanningTree};
