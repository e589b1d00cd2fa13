//! The path basis `ℬ` and the relation chains `Γₙ`.
//!
//! Both sets are governed by unique-successor maps: a nontrivial `ℬ`-path is
//! determined by its first arrow and its length (follow the free successor),
//! and a nontrivial element of `Γ` likewise (follow the relation successor).

use skewgentle_core::{ArrowId, Path, SkewGentleTriple, VertexId};

/// An element of `Γₙ` together with its special-power flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaPath {
    pub path: Path,
    /// `Some(ε)` when the path equals `εⁿ` for a special loop `ε` (`n ≥ 1`).
    pub special_power: Option<ArrowId>,
}

impl GammaPath {
    pub fn new(t: &SkewGentleTriple, path: Path) -> Self {
        let special_power = t.special_power_of(&path);
        GammaPath {
            path,
            special_power,
        }
    }

    pub fn is_special_power(&self) -> bool {
        self.special_power.is_some()
    }
}

fn chain(
    t: &SkewGentleTriple,
    start: ArrowId,
    len: usize,
    next: impl Fn(ArrowId) -> Option<ArrowId>,
) -> Option<Path> {
    if len == 0 {
        return Some(Path::trivial(t.quiver().source(start)));
    }
    let mut arrows = Vec::with_capacity(len);
    let mut cur = start;
    arrows.push(cur);
    while arrows.len() < len {
        cur = next(cur)?;
        arrows.push(cur);
    }
    Some(Path::from_raw(t.quiver().source(start), arrows))
}

/// The `ℬ`-path of length `len ≥ 1` starting with arrow `start`, if any.
pub fn b_chain(t: &SkewGentleTriple, start: ArrowId, len: usize) -> Option<Path> {
    chain(t, start, len, |a| t.free_successor(a))
}

/// The element of `Γ` of length `len ≥ 1` starting with arrow `start`, if any.
pub fn gamma_chain(t: &SkewGentleTriple, start: ArrowId, len: usize) -> Option<Path> {
    chain(t, start, len, |a| t.relation_successor(a))
}

/// All `ℬ`-paths of exactly the given length, sorted.
pub fn b_paths_of_length(t: &SkewGentleTriple, len: usize) -> Vec<Path> {
    let q = t.quiver();
    let mut v: Vec<Path> = if len == 0 {
        (0..q.vertex_count()).map(Path::trivial).collect()
    } else {
        (0..q.arrow_count())
            .filter_map(|a| b_chain(t, a, len))
            .collect()
    };
    v.sort();
    v
}

/// All `ℬ`-paths of length at most `max_len` (trivial paths included), in
/// the deterministic path order (by length, then lexicographically).
pub fn enumerate_b(t: &SkewGentleTriple, max_len: usize) -> Vec<Path> {
    (0..=max_len).flat_map(|l| b_paths_of_length(t, l)).collect()
}

/// `Γₙ` as plain paths, sorted.  `Γ₀ = Q₀` and `Γ₁ = Q₁`.
pub fn gamma_paths(t: &SkewGentleTriple, n: usize) -> Vec<Path> {
    let q = t.quiver();
    let mut v: Vec<Path> = if n == 0 {
        (0..q.vertex_count()).map(Path::trivial).collect()
    } else {
        (0..q.arrow_count())
            .filter_map(|a| gamma_chain(t, a, n))
            .collect()
    };
    v.sort();
    v
}

/// `Γₙ` with special-power flags.
pub fn enumerate_gamma(t: &SkewGentleTriple, n: usize) -> Vec<GammaPath> {
    gamma_paths(t, n)
        .into_iter()
        .map(|p| GammaPath::new(t, p))
        .collect()
}

/// The periodic structure of the free-successor chain starting at an arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainShape {
    /// The chain stops; the longest `ℬ`-path starting here has this length.
    Finite(usize),
    /// The arrow lies on a cocomplete cycle of the given period and degree.
    Periodic { period: usize, degree: i64 },
}

/// Determines whether the free-successor chain from `start` terminates or
/// cycles.  A chain can only cycle back to its own first arrow, because
/// free predecessors are unique.
pub fn chain_shape(t: &SkewGentleTriple, start: ArrowId) -> ChainShape {
    let q = t.quiver();
    let mut cur = start;
    let mut len = 1;
    let mut degree = q.degree(start);
    loop {
        match t.free_successor(cur) {
            None => return ChainShape::Finite(len),
            Some(n) if n == start => return ChainShape::Periodic { period: len, degree },
            Some(n) => {
                cur = n;
                len += 1;
                degree += q.degree(n);
                assert!(len <= q.arrow_count() + 1, "free-successor chain exceeded |Q1|");
            }
        }
    }
}

/// Whether some `ℬ`-path from `source` to `target` of the given degree has
/// length strictly greater than `min_len`.  Decided exactly from the chain
/// shapes, so it terminates even when such paths are infinite in number.
pub fn long_b_path_exists(
    t: &SkewGentleTriple,
    source: VertexId,
    target: VertexId,
    degree: i64,
    min_len: usize,
) -> bool {
    let q = t.quiver();
    for &x in q.outgoing(source) {
        match chain_shape(t, x) {
            ChainShape::Finite(maxl) => {
                let mut cur = x;
                let mut deg = q.degree(x);
                for l in 1..=maxl {
                    if l > 1 {
                        cur = t.free_successor(cur).expect("chain length");
                        deg += q.degree(cur);
                    }
                    if l > min_len && q.target(cur) == target && deg == degree {
                        return true;
                    }
                }
            }
            ChainShape::Periodic { period, degree: d } => {
                // prefix of length p (0 ≤ p < period) followed by k full turns
                let mut prefix_deg = 0i64;
                let mut cur_target = source;
                let mut cur = x;
                for p in 0..period {
                    if p > 0 {
                        prefix_deg += q.degree(cur);
                        cur_target = q.target(cur);
                        cur = t.free_successor(cur).expect("periodic chain");
                    }
                    if cur_target != target {
                        continue;
                    }
                    let min_k = if p == 0 { 1 } else { 0 };
                    if d == 0 {
                        if prefix_deg == degree {
                            return true;
                        }
                        continue;
                    }
                    let diff = degree - prefix_deg;
                    if diff % d != 0 {
                        continue;
                    }
                    let k = diff / d;
                    if k >= min_k && (k as usize) * period + p > min_len {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// All `ℬ`-paths from `source` to `target` of the given degree and length
/// at most `max_len`, sorted.
pub fn b_paths_between(
    t: &SkewGentleTriple,
    source: VertexId,
    target: VertexId,
    degree: i64,
    max_len: usize,
) -> Vec<Path> {
    let q = t.quiver();
    let mut out = Vec::new();
    if source == target && degree == 0 {
        out.push(Path::trivial(source));
    }
    if max_len == 0 {
        return out;
    }
    for &x in q.outgoing(source) {
        let mut arrows = vec![x];
        let mut deg = q.degree(x);
        let mut cur = x;
        loop {
            if q.target(cur) == target && deg == degree {
                out.push(Path::from_raw(source, arrows.clone()));
            }
            if arrows.len() >= max_len {
                break;
            }
            match t.free_successor(cur) {
                Some(n) => {
                    cur = n;
                    deg += q.degree(n);
                    arrows.push(n);
                }
                None => break,
            }
        }
    }
    out.sort();
    out
}
