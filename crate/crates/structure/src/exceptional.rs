//! Product and bracket tables of the quivers excluded from the general
//! theorems: one vertex with one loop `a` (five cases) and the Kronecker
//! quiver.
//!
//! On one loop every basis class other than the unit is represented by a
//! single pair `(aᵖ, a^q)`, which is recorded as `(p, q)`.

use skewgentle_complex::Cochain;
use skewgentle_core::{ArrowId, Path, SkewGentleTriple};

use crate::cocycles;
use crate::shape::OneLoopCase;

/// `(p, q)` for a representative that is exactly one pair `(aᵖ, a^q)` with
/// coefficient one.
pub fn loop_shape(rep: &Cochain) -> Option<(usize, usize)> {
    let mut terms = rep.terms().iter();
    let (pair, c) = terms.next()?;
    if terms.next().is_some() || !c.is_one() {
        return None;
    }
    Some((pair.q.len(), pair.alpha.len()))
}

/// `(aᵖ, a^q)` as a cochain.
pub fn loop_pair(t: &SkewGentleTriple, arrow: ArrowId, p: usize, q: usize) -> Cochain {
    let a = Path::arrow(t.quiver(), arrow);
    cocycles::pair(t, a.power(p), a.power(q))
}

/// A table entry: `None` for zero, otherwise `(sign exponent, p, q)`.
type LoopTerm = Option<(i64, usize, usize)>;

/// The cup products listed in the one-loop tables, in the listed order
/// only (`None` when the ordered pair is not listed).  Unit factors are
/// handled by the caller.
pub fn one_loop_cup_listed(case: OneLoopCase, x: (usize, usize), y: (usize, usize)) -> Option<LoopTerm> {
    let zero = Some(None);
    let prod = |e: usize, p: usize, q: usize| Some(Some((e as i64, p, q)));
    match case {
        OneLoopCase::Special => match (x, y) {
            ((0, 1), (0, 1)) => prod(0, 0, 1),
            _ => None,
        },
        OneLoopCase::SquareZeroOddOrCharTwo => match (x, y) {
            ((0, 1), (0, 1)) => zero,
            ((0, 1), (n, 0)) if n >= 1 => prod(0, n, 1),
            ((0, 1), (n, 1)) if n >= 1 => zero,
            ((m, 0), (n, 0)) if m >= 1 && n >= 1 => prod(m * n, m + n, 0),
            ((m, 0), (n, 1)) if m >= 1 && n >= 1 => prod(m * n, m + n, 1),
            ((m, 1), (n, 1)) if m >= 1 && n >= 1 => zero,
            _ => None,
        },
        OneLoopCase::SquareZeroEven => match (x, y) {
            ((0, 1), (0, 1)) => zero,
            ((0, 1), (n, 0)) if n >= 1 => zero,
            ((0, 1), (n, 1)) if n >= 1 => zero,
            ((m, 0), (n, 0)) if m >= 1 && n >= 1 => prod(0, m + n, 0),
            ((m, 0), (n, 1)) if m >= 1 && n >= 1 => prod(0, m + n, 1),
            ((m, 1), (n, 1)) if m >= 1 && n >= 1 => zero,
            _ => None,
        },
        OneLoopCase::FreeOdd => match (x, y) {
            ((0, m), (1, 0)) if m >= 1 => zero,
            ((0, m), (0, n)) if m >= 1 && n >= 1 => prod(0, 0, m + n),
            ((0, m), (1, n)) if m >= 1 && n >= 1 => prod(0, 1, m + n),
            ((1, 0), (1, 0)) => zero,
            ((1, 0), (1, n)) if n >= 1 => zero,
            ((1, m), (1, n)) if m >= 1 && n >= 1 => zero,
            _ => None,
        },
        OneLoopCase::FreeEvenOrCharTwo => match (x, y) {
            ((0, m), (0, n)) if m >= 1 && n >= 1 => prod(0, 0, m + n),
            ((0, m), (1, n)) if m >= 1 => prod(0, 1, m + n),
            ((1, _), (1, _)) => zero,
            _ => None,
        },
    }
}

/// The nonzero generator brackets listed for one loop, in the listed order
/// only; every other generator bracket is zero.  Returns `(coefficient, p,
/// q)`.
pub fn one_loop_bracket_listed(case: OneLoopCase, x: (usize, usize), y: (usize, usize)) -> Option<(i64, usize, usize)> {
    match (case, x, y) {
        (OneLoopCase::SquareZeroOddOrCharTwo | OneLoopCase::FreeEvenOrCharTwo, (1, 0), (0, 1)) => {
            Some((1, 0, 0))
        }
        (OneLoopCase::SquareZeroEven, (1, 1), (0, 1)) => Some((1, 0, 1)),
        (OneLoopCase::SquareZeroEven, (1, 1), (2, 0)) => Some((-2, 2, 0)),
        (OneLoopCase::FreeOdd, (0, 2), (1, 1)) => Some((-2, 0, 2)),
        (OneLoopCase::FreeOdd, (1, 0), (1, 1)) => Some((1, 1, 0)),
        _ => None,
    }
}

/// The generating set used by the Kronecker bracket table:
/// `(a,a)`, `(a,b)`, `(b,a)`.
pub fn kronecker_generators(t: &SkewGentleTriple, a: ArrowId, b: ArrowId) -> Vec<(String, Cochain)> {
    let q = t.quiver();
    let (pa, pb) = (Path::arrow(q, a), Path::arrow(q, b));
    let name = |x: &Path, y: &Path| format!("({}, {})", t.show(x), t.show(y));
    vec![
        (name(&pa, &pa), cocycles::pair(t, pa.clone(), pa.clone())),
        (name(&pa, &pb), cocycles::pair(t, pa.clone(), pb.clone())),
        (name(&pb, &pa), cocycles::pair(t, pb.clone(), pa.clone())),
    ]
}

/// The nonzero Kronecker brackets among [`kronecker_generators`] (indices
/// `0 = (a,a)`, `1 = (a,b)`, `2 = (b,a)`), in the listed order only:
/// `[(a,a),(a,b)] = −(a,b)`, `[(a,a),(b,a)] = (b,a)`, and, when `|a| − |b|`
/// is even and `char 𝕂 ≠ 2`, `[(a,b),(b,a)] = −2(a,a)`.
pub fn kronecker_bracket_listed(t: &SkewGentleTriple, a: ArrowId, b: ArrowId, x: usize, y: usize) -> Option<(i64, usize)> {
    let q = t.quiver();
    let even = (q.degree(a) - q.degree(b)).rem_euclid(2) == 0;
    match (x, y) {
        (0, 1) => Some((-1, 1)),
        (0, 2) => Some((1, 2)),
        (1, 2) if even && !t.field().is_char_two() => Some((-2, 0)),
        _ => None,
    }
}
