//! Maximal elements of `ℬ` and `Γ`.

use skewgentle_core::{Path, SkewGentleTriple};

/// `ℬ`-maximal paths and cycles, and `Γ`-maximal elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalElements {
    /// `p ∈ ℬ` with `x·p = p·y = 0` in `A` for every arrow `x`, `y`.
    pub b_maximal_paths: Vec<Path>,
    /// The `ℬ`-maximal paths of positive length with `s(p) = t(p)`.
    pub b_maximal_cycles: Vec<Path>,
    /// Elements of `Γ` of positive length that are not proper subpaths of
    /// other elements of `Γ`.
    pub gamma_maximal: Vec<Path>,
}

/// Computes the maximal elements.  Every search follows a unique-successor
/// chain from an arrow without predecessor; such a chain cannot close up
/// (predecessors are unique), so it stops after at most `|Q₁|` steps.
pub fn maximal_elements(t: &SkewGentleTriple) -> MaximalElements {
    let q = t.quiver();
    let mut b_max = Vec::new();
    for v in 0..q.vertex_count() {
        if q.outgoing(v).is_empty() && q.incoming(v).is_empty() {
            b_max.push(Path::trivial(v));
        }
    }
    for x in 0..q.arrow_count() {
        if t.is_special(x) || t.free_predecessor(x).is_some() {
            continue;
        }
        let mut arrows = vec![x];
        let mut cur = x;
        while let Some(n) = t.free_successor(cur) {
            arrows.push(n);
            cur = n;
            assert!(arrows.len() <= q.arrow_count(), "non-terminating maximal search");
        }
        // A special loop at either end would be absorbed (ε·ε = ε), so such
        // a path is never maximal in A.
        if t.is_special(cur) {
            continue;
        }
        b_max.push(Path::from_raw(q.source(x), arrows));
    }
    b_max.sort();
    let b_cycles = b_max
        .iter()
        .filter(|p| !p.is_trivial() && p.is_cycle(q))
        .cloned()
        .collect();

    let mut g_max = Vec::new();
    for x in 0..q.arrow_count() {
        if t.relation_predecessor(x).is_some() {
            continue;
        }
        let mut arrows = vec![x];
        let mut cur = x;
        while let Some(n) = t.relation_successor(cur) {
            arrows.push(n);
            cur = n;
            assert!(arrows.len() <= q.arrow_count(), "non-terminating maximal search");
        }
        g_max.push(Path::from_raw(q.source(x), arrows));
    }
    g_max.sort();

    MaximalElements {
        b_maximal_paths: b_max,
        b_maximal_cycles: b_cycles,
        gamma_maximal: g_max,
    }
}

/// Maximal paths of the gentle companion `A′` (where `ε² = 0`): maximal
/// free-successor chains, special loops allowed at the ends.
pub fn companion_maximal_paths(t: &SkewGentleTriple) -> Vec<Path> {
    let q = t.quiver();
    let mut out = Vec::new();
    for x in 0..q.arrow_count() {
        if t.free_predecessor(x).is_some() {
            continue;
        }
        let mut arrows = vec![x];
        let mut cur = x;
        while let Some(n) = t.free_successor(cur) {
            arrows.push(n);
            cur = n;
        }
        out.push(Path::from_raw(q.source(x), arrows));
    }
    out.sort();
    out
}
