//! Deterministic spanning tree of the quiver with special loops removed.

use std::collections::BTreeSet;

use skewgentle_core::{ArrowId, SkewGentleTriple};

/// A spanning tree `T` and the complementary non-special arrows, which index
/// the degree-`(1,0)` derivation classes and the fundamental-group
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    pub arrows: BTreeSet<ArrowId>,
    /// Arrows outside `T ∪ Sp`, in id order.
    pub complement: Vec<ArrowId>,
}

/// Grows the tree from the lexicographically smallest vertex, each step
/// adding the lexicographically smallest non-special arrow that joins the
/// current tree to a new vertex.
pub fn spanning_tree(t: &SkewGentleTriple) -> SpanningTree {
    let q = t.quiver();
    let n = q.vertex_count();
    let mut in_tree = vec![false; n];
    let mut arrows = BTreeSet::new();
    if n > 0 {
        in_tree[0] = true;
        loop {
            let next = (0..q.arrow_count()).find(|&a| {
                !t.is_special(a) && in_tree[q.source(a)] != in_tree[q.target(a)]
            });
            match next {
                Some(a) => {
                    in_tree[q.source(a)] = true;
                    in_tree[q.target(a)] = true;
                    arrows.insert(a);
                }
                None => break,
            }
        }
    }
    let complement = (0..q.arrow_count())
        .filter(|a| !t.is_special(*a) && !arrows.contains(a))
        .collect();
    SpanningTree { arrows, complement }
}
