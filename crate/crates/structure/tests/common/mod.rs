#![allow(dead_code)]

use skewgentle_complex::Cochain;
use skewgentle_core::random::random_triple;
use skewgentle_core::{presets, Path, SkewGentleTriple};
use skewgentle_structure::{Bounds, CohomologyWindow};

/// The test presentations: the three-cycle example under four gradings and
/// three characteristics, the five one-loop cases, both Kronecker parities,
/// the linear A2 quiver and two random triples.
pub fn presentations() -> Vec<(String, SkewGentleTriple)> {
    let mut v = Vec::new();
    for deg in [(0, 0, 0), (1, 0, 0), (1, 1, 0), (-1, 2, 1)] {
        for ch in [0, 2, 3] {
            v.push((format!("three-cycle {deg:?} char {ch}"), presets::three_cycle(deg, ch)));
        }
    }
    v.push(("one loop, special".into(), presets::special_loop(0)));
    v.push(("one loop, a²=0, |a| odd".into(), presets::one_loop(false, true, 1, 0)));
    v.push(("one loop, a²=0, char 2".into(), presets::one_loop(false, true, 0, 2)));
    v.push(("one loop, a²=0, |a| even".into(), presets::one_loop(false, true, 2, 3)));
    v.push(("one loop, free, |a| odd".into(), presets::one_loop(false, false, 1, 0)));
    v.push(("one loop, free, char 2".into(), presets::one_loop(false, false, 2, 2)));
    v.push(("one loop, free, |a| even".into(), presets::one_loop(false, false, 2, 0)));
    v.push(("kronecker even".into(), presets::kronecker(0, 0, 0)));
    v.push(("kronecker odd".into(), presets::kronecker(1, 0, 0)));
    v.push(("linear A2".into(), presets::linear_a2(0, 0)));
    v.push(("random seed 7".into(), random_triple(7, 6, 0)));
    v.push(("random seed 19".into(), random_triple(19, 6, 3)));
    v
}

/// The desk-scale window: `n ≤ 6`, `|j| ≤ 8`, paths of length at most 12.
pub fn desk_window(t: &SkewGentleTriple) -> CohomologyWindow {
    CohomologyWindow::new(t, Bounds::new(6, -8, 8, 12))
}

/// A path given in written (right-to-left) order.
pub fn path(t: &SkewGentleTriple, written: &[&str]) -> Path {
    Path::from_written_ids(t.quiver(), written).expect("path")
}

pub fn arrow(t: &SkewGentleTriple, id: &str) -> usize {
    t.quiver().arrow_index(id).expect("arrow")
}

pub fn vertex(t: &SkewGentleTriple, name: &str) -> Path {
    Path::trivial(t.quiver().vertex_index(name).expect("vertex"))
}

/// The bidegree of a nonzero homogeneous cochain.
pub fn bidegree(t: &SkewGentleTriple, z: &Cochain) -> (usize, i64) {
    (z.degree(), z.internal_degree(t.quiver()).expect("homogeneous"))
}

/// Asserts `z ≡ w` in cohomology, both living in the bidegree of `w`.
pub fn assert_same_class(w: &CohomologyWindow, z: &Cochain, expected: &Cochain, what: &str) {
    let t = w.triple();
    if z.is_zero() && expected.is_zero() {
        return;
    }
    let (n, j) = if expected.is_zero() { bidegree(t, z) } else { bidegree(t, expected) };
    let same = w.same_class(n, j, z, expected).expect("certified block");
    assert!(
        same,
        "{what}: computed {} but expected {} at ({n},{j})",
        z.display(t),
        expected.display(t)
    );
}
