#![allow(dead_code)]

use skewgentle_core::random::random_triple;
use skewgentle_core::{presets, SkewGentleTriple};

/// The three-cycle example under four gradings and three characteristics,
/// every one-loop case, both Kronecker parities, the linear A2 quiver and
/// two random triples.
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
