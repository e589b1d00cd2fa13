//! Recognition of the quivers excluded from the general theorems: one
//! vertex with one loop (five cases) and the Kronecker quiver.

use skewgentle_core::{ArrowId, SkewGentleTriple};

/// The five cases of a quiver with one vertex and one loop `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OneLoopCase {
    /// `a` is a special loop.
    Special,
    /// `a² ∈ R` and (`char 𝕂 = 2` or `|a|` odd).
    SquareZeroOddOrCharTwo,
    /// `a² ∈ R`, `char 𝕂 ≠ 2`, `|a|` even.
    SquareZeroEven,
    /// `a² ∉ R`, `char 𝕂 ≠ 2`, `|a|` odd.
    FreeOdd,
    /// `a² ∉ R` and (`char 𝕂 = 2` or `|a|` even).
    FreeEvenOrCharTwo,
}

impl OneLoopCase {
    /// The three gentle cases in which `(a, a)` is a redundant generator.
    pub fn drops_derivation(self) -> bool {
        matches!(
            self,
            OneLoopCase::SquareZeroOddOrCharTwo | OneLoopCase::FreeEvenOrCharTwo
        )
    }
}

/// Shape of the quiver as far as the general theorems are concerned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuiverShape {
    OneLoop { arrow: ArrowId, case: OneLoopCase },
    Kronecker { a: ArrowId, b: ArrowId },
    General,
}

/// Classifies a triple.
pub fn quiver_shape(t: &SkewGentleTriple) -> QuiverShape {
    let q = t.quiver();
    if q.vertex_count() == 1 && q.arrow_count() == 1 {
        let a = 0;
        let odd = q.degree(a).rem_euclid(2) == 1;
        let char2 = t.field().is_char_two();
        let case = if t.is_special(a) {
            OneLoopCase::Special
        } else if t.in_r(a, a) {
            if char2 || odd {
                OneLoopCase::SquareZeroOddOrCharTwo
            } else {
                OneLoopCase::SquareZeroEven
            }
        } else if !char2 && odd {
            OneLoopCase::FreeOdd
        } else {
            OneLoopCase::FreeEvenOrCharTwo
        };
        return QuiverShape::OneLoop { arrow: a, case };
    }
    if q.vertex_count() == 2 && q.arrow_count() == 2 {
        let (x, y) = (q.arrow(0), q.arrow(1));
        if x.source == y.source && x.target == y.target && !x.is_loop() {
            return QuiverShape::Kronecker { a: 0, b: 1 };
        }
    }
    QuiverShape::General
}
