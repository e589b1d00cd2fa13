//! Closed curves of the surface that correspond to generators, and their
//! combinatorial winding numbers (closed forms only).

use skewgentle_core::{ArrowId, Path, SkewGentleTriple};

/// A closed curve, recorded by its arrow sequence `p_C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveClass {
    /// Around a boundary component with one marked point: `p_C = γα⁻¹`
    /// with `γ` walked along the boundary and `α` the path of the marked
    /// vertex (either may be trivial).
    Boundary { gamma: Path, alpha: Path },
    /// Around a `G`-puncture: `p_C` is a primitive relation-free cycle.
    GPuncture { cycle: Path },
    /// Around a `G*`-puncture: `p_C` is a primitive complete cycle.
    GStarPuncture { cycle: Path },
    /// The loop of `π₁` crossing the edge of a single arrow `c`.
    ArrowPair { arrow: ArrowId },
}

/// `w(C)`: `l(γ) − |γ| + |α| − 1` on a boundary curve, `|p_C|` around a
/// `G`-puncture, `l(p_C) − |p_C|` around a `G*`-puncture, and `1 − |c|`
/// for an arrow pair.
pub fn winding_number(t: &SkewGentleTriple, curve: &CurveClass) -> i64 {
    let q = t.quiver();
    match curve {
        CurveClass::Boundary { gamma, alpha } => {
            gamma.len() as i64 - gamma.degree(q) + alpha.degree(q) - 1
        }
        CurveClass::GPuncture { cycle } => cycle.degree(q),
        CurveClass::GStarPuncture { cycle } => cycle.len() as i64 - cycle.degree(q),
        CurveClass::ArrowPair { arrow } => 1 - q.degree(*arrow),
    }
}

/// The multiplier `i` relating a puncture's winding number to the total
/// degree of its generator: `2` when `w` is odd and `char 𝕂 ≠ 2`, else `1`.
pub fn puncture_multiplier(t: &SkewGentleTriple, w: i64) -> i64 {
    if w.rem_euclid(2) == 1 && !t.field().is_char_two() {
        2
    } else {
        1
    }
}
