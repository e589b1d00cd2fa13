//! Standard presentations used throughout the tests and the command line.

use crate::triple::{validate_triple, RawArrow, RawPresentation, SkewGentleTriple};

/// Builds a raw presentation from compact literals.  Relations are given
/// written right-to-left, `("b", "a")` meaning "first `a`, then `b`".
pub fn raw(
    characteristic: u64,
    vertices: &[&str],
    arrows: &[(&str, &str, &str, i64)],
    relations: &[(&str, &str)],
    special: &[&str],
) -> RawPresentation {
    RawPresentation {
        characteristic,
        vertices: vertices.iter().map(|s| s.to_string()).collect(),
        arrows: arrows
            .iter()
            .map(|&(id, s, t, d)| RawArrow {
                id: id.into(),
                source: s.into(),
                target: t.into(),
                degree: d,
            })
            .collect(),
        relations: relations
            .iter()
            .map(|&(x, y)| vec![x.to_string(), y.to_string()])
            .collect(),
        special: special.iter().map(|s| s.to_string()).collect(),
    }
}

fn build(r: RawPresentation) -> SkewGentleTriple {
    validate_triple(&r).expect("preset presentation is valid")
}

/// The three-cycle `a: 1→2, b: 2→3, c: 3→1` with special loops `eps2`,
/// `eps3` at vertices 2 and 3 and relations `ba`, `cb`.
pub fn three_cycle_raw(degrees: (i64, i64, i64), characteristic: u64) -> RawPresentation {
    raw(
        characteristic,
        &["1", "2", "3"],
        &[
            ("a", "1", "2", degrees.0),
            ("b", "2", "3", degrees.1),
            ("c", "3", "1", degrees.2),
            ("eps2", "2", "2", 0),
            ("eps3", "3", "3", 0),
        ],
        &[("b", "a"), ("c", "b")],
        &["eps2", "eps3"],
    )
}

/// See [`three_cycle_raw`].
pub fn three_cycle(degrees: (i64, i64, i64), characteristic: u64) -> SkewGentleTriple {
    build(three_cycle_raw(degrees, characteristic))
}

/// One vertex `v` with a single loop `a`.
pub fn one_loop(special: bool, square_zero: bool, degree: i64, characteristic: u64) -> SkewGentleTriple {
    let rel: &[(&str, &str)] = if square_zero && !special {
        &[("a", "a")]
    } else {
        &[]
    };
    let sp: &[&str] = if special { &["a"] } else { &[] };
    build(raw(characteristic, &["v"], &[("a", "v", "v", degree)], rel, sp))
}

/// The Kronecker quiver `a, b: 1→2`.
pub fn kronecker(deg_a: i64, deg_b: i64, characteristic: u64) -> SkewGentleTriple {
    build(raw(
        characteristic,
        &["1", "2"],
        &[("a", "1", "2", deg_a), ("b", "1", "2", deg_b)],
        &[],
        &[],
    ))
}

/// The linear quiver `a: 1→2`.
pub fn linear_a2(degree: i64, characteristic: u64) -> SkewGentleTriple {
    build(raw(characteristic, &["1", "2"], &[("a", "1", "2", degree)], &[], &[]))
}

/// One vertex with one special loop.
pub fn special_loop(characteristic: u64) -> SkewGentleTriple {
    one_loop(true, false, 0, characteristic)
}
