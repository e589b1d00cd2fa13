//! Paths in a quiver.
//!
//! A path is stored in *traversal order*: `arrows[0]` is the first arrow
//! walked (the rightmost letter in the usual right-to-left notation
//! `aₗ…a₁`).  Trivial paths remember their vertex.

use std::cmp::Ordering;

use thiserror::Error;

use crate::quiver::{ArrowId, Quiver, VertexId};

/// Error for arrow sequences that do not compose.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("empty arrow sequence (use a trivial path instead)")]
    Empty,
    #[error("arrows at positions {0} and {1} do not compose")]
    NotComposable(usize, usize),
    #[error("path is not a cycle")]
    NotACycle,
}

/// A path `aₗ…a₁` (or the trivial path `e_v`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    /// The trivial path at `v`.
    pub fn trivial(v: VertexId) -> Self {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    /// The length-one path consisting of arrow `a`.
    pub fn arrow(q: &Quiver, a: ArrowId) -> Self {
        Path {
            source: q.source(a),
            arrows: vec![a],
        }
    }

    /// Builds a nontrivial path from arrows in traversal order.
    pub fn from_traversal(q: &Quiver, arrows: Vec<ArrowId>) -> Result<Self, PathError> {
        let first = *arrows.first().ok_or(PathError::Empty)?;
        for (i, w) in arrows.windows(2).enumerate() {
            if q.target(w[0]) != q.source(w[1]) {
                return Err(PathError::NotComposable(i, i + 1));
            }
        }
        Ok(Path {
            source: q.source(first),
            arrows,
        })
    }

    /// Builds a path from arrows written right-to-left (`[aₗ, …, a₁]`).
    pub fn from_written(q: &Quiver, mut written: Vec<ArrowId>) -> Result<Self, PathError> {
        written.reverse();
        Self::from_traversal(q, written)
    }

    /// Builds a path from arrow ids written right-to-left.
    pub fn from_written_ids(q: &Quiver, ids: &[&str]) -> Option<Self> {
        let written: Option<Vec<ArrowId>> = ids.iter().map(|id| q.arrow_index(id)).collect();
        Self::from_written(q, written?).ok()
    }

    /// Length `l(p)`.
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Arrows in traversal order (first walked first).
    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self, q: &Quiver) -> VertexId {
        match self.arrows.last() {
            Some(&a) => q.target(a),
            None => self.source,
        }
    }

    /// Degree `|p|`, the sum of the arrow degrees.
    pub fn degree(&self, q: &Quiver) -> i64 {
        self.arrows.iter().map(|&a| q.degree(a)).sum()
    }

    /// The first arrow walked (`a₁`, rightmost when written).
    pub fn first_arrow(&self) -> Option<ArrowId> {
        self.arrows.first().copied()
    }

    /// The last arrow walked (`aₗ`, leftmost when written).
    pub fn last_arrow(&self) -> Option<ArrowId> {
        self.arrows.last().copied()
    }

    pub fn is_cycle(&self, q: &Quiver) -> bool {
        self.target(q) == self.source
    }

    /// True if `self` and `other` have the same source and target.
    pub fn is_parallel(&self, q: &Quiver, other: &Path) -> bool {
        self.source == other.source && self.target(q) == other.target(q)
    }

    /// The path walking `self` and then `next` (written `next·self`), if the
    /// endpoints match.
    pub fn then(&self, q: &Quiver, next: &Path) -> Option<Path> {
        if self.target(q) != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path {
            source: self.source,
            arrows,
        })
    }

    /// The written product `left·right` (walk `right`, then `left`).
    pub fn mul(q: &Quiver, left: &Path, right: &Path) -> Option<Path> {
        right.then(q, left)
    }

    /// Subpath of `len` arrows starting at traversal position `start`.
    pub fn subpath(&self, q: &Quiver, start: usize, len: usize) -> Path {
        assert!(start + len <= self.arrows.len());
        if len == 0 {
            let v = if start == 0 {
                self.source
            } else {
                q.target(self.arrows[start - 1])
            };
            return Path::trivial(v);
        }
        Path {
            source: q.source(self.arrows[start]),
            arrows: self.arrows[start..start + len].to_vec(),
        }
    }

    /// The `k`-th power of a cycle (`k ≥ 1`), or the trivial path for `k = 0`.
    pub fn power(&self, k: usize) -> Path {
        Path {
            source: self.source,
            arrows: self.arrows.repeat(k),
        }
    }

    /// `rot(cₘ…c₁) = cₘ₋₁…c₁cₘ`: the leftmost letter moves to the right end.
    pub fn rot(&self, q: &Quiver) -> Result<Path, PathError> {
        if !self.is_cycle(q) {
            return Err(PathError::NotACycle);
        }
        if self.arrows.is_empty() {
            return Ok(self.clone());
        }
        let mut arrows = Vec::with_capacity(self.arrows.len());
        let last = *self.arrows.last().unwrap();
        arrows.push(last);
        arrows.extend_from_slice(&self.arrows[..self.arrows.len() - 1]);
        Ok(Path {
            source: q.source(last),
            arrows,
        })
    }

    /// `rotⁱ`.
    pub fn rot_pow(&self, q: &Quiver, i: usize) -> Result<Path, PathError> {
        let mut p = self.clone();
        for _ in 0..i {
            p = p.rot(q)?;
        }
        Ok(p)
    }

    pub fn contains_arrow(&self, a: ArrowId) -> bool {
        self.arrows.contains(&a)
    }

    /// Removes every occurrence of the arrows selected by `drop`; the result
    /// need not be a path of the quiver and is only used as a label.
    pub fn without(&self, drop: impl Fn(ArrowId) -> bool) -> Vec<ArrowId> {
        self.arrows.iter().copied().filter(|&a| !drop(a)).collect()
    }

    /// Renders the path right-to-left, e.g. `cba`, or `e_1` when trivial.
    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", q.vertex_name(self.source));
        }
        let ids: Vec<&str> = self
            .arrows
            .iter()
            .rev()
            .map(|&a| q.arrow(a).id.as_str())
            .collect();
        ids.join(q.path_separator())
    }

    /// Arrow ids written right-to-left (empty for a trivial path).
    pub fn written_ids(&self, q: &Quiver) -> Vec<String> {
        self.arrows
            .iter()
            .rev()
            .map(|&a| q.arrow(a).id.clone())
            .collect()
    }

    /// Internal constructor for callers that already know the sequence
    /// composes.
    pub fn from_raw(source: VertexId, arrows: Vec<ArrowId>) -> Path {
        Path { source, arrows }
    }
}

impl Ord for Path {
    /// Deterministic order: by length, then by the arrow-index sequence in
    /// traversal order, then by vertex (which only matters for trivial
    /// paths).
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
