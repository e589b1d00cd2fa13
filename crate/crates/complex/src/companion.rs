//! Comparison between `A` and its gentle companion `A′`: the special-loop
//! spaces `V_spⁿ` and the dimension check `HH(A′) = HH(A) ⊕ V_sp`.

use std::collections::BTreeMap;

use skewgentle_core::{Path, SkewGentleTriple};

use crate::cochain::ParallelPair;
use crate::cohomology::cohomology;
use crate::differential::Variant;
use crate::error::ComplexError;

/// The basis of `V_spⁿ` (`n ≥ 1`); all pairs have internal degree 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VspBlock {
    pub n: usize,
    pub pairs: Vec<ParallelPair>,
}

impl VspBlock {
    pub fn dimension(&self) -> usize {
        self.pairs.len()
    }

    /// `dim V_sp^{n,j}`.
    pub fn dimension_at(&self, j: i64) -> usize {
        if j == 0 {
            self.pairs.len()
        } else {
            0
        }
    }
}

/// `V_spⁿ`: per special loop `ε`, `{(εⁿ, e), (εⁿ, ε)}` in characteristic 2,
/// `{(εⁿ, e)}` for even `n` and `{(εⁿ, ε)}` for odd `n` otherwise.  Empty for
/// `n = 0`.
pub fn vsp_block(t: &SkewGentleTriple, n: usize) -> VspBlock {
    let q = t.quiver();
    let mut pairs = Vec::new();
    if n >= 1 {
        let char2 = t.field().is_char_two();
        for eps in t.special_loops() {
            let e = Path::arrow(q, eps);
            let power = e.power(n);
            let trivial = Path::trivial(q.source(eps));
            if char2 || n % 2 == 0 {
                pairs.push(ParallelPair::new(power.clone(), trivial));
            }
            if char2 || n % 2 == 1 {
                pairs.push(ParallelPair::new(power, e));
            }
        }
    }
    pairs.sort();
    VspBlock { n, pairs }
}

/// One entry of the comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionComparison {
    pub n: usize,
    pub j: i64,
    pub skew: usize,
    pub companion: usize,
    pub vsp: usize,
    /// Both blocks certified by the length bound; uncertified entries are
    /// reported but not asserted.
    pub certified: bool,
}

impl CompanionComparison {
    pub fn holds(&self) -> bool {
        self.companion == self.skew + self.vsp
    }
}

/// Compares `dim HH^{n,j}(A′)` with `dim HH^{n,j}(A) + dim V_sp^{n,j}`.
pub fn gentle_companion_check(
    t: &SkewGentleTriple,
    n: usize,
    j: i64,
    max_len: usize,
) -> Result<CompanionComparison, ComplexError> {
    let a = cohomology(t, n, j, Variant::D, max_len);
    let b = cohomology(t, n, j, Variant::Delta, max_len);
    let cmp = CompanionComparison {
        n,
        j,
        skew: a.dimension,
        companion: b.dimension,
        vsp: vsp_block(t, n).dimension_at(j),
        certified: a.certificate.is_sound() && b.certificate.is_sound(),
    };
    if cmp.certified && !cmp.holds() {
        return Err(ComplexError::CompanionMismatch {
            n,
            j,
            skew: cmp.skew,
            companion: cmp.companion,
            vsp: cmp.vsp,
        });
    }
    Ok(cmp)
}

/// The comparison over a window, including the total-degree form
/// `dim HH^N(A′) = dim HH^N(A) + dim V_sp^N` for `N > 0`, asserted for
/// every `N` all of whose window blocks are certified.
pub fn gentle_companion_window(
    t: &SkewGentleTriple,
    n_max: usize,
    j_min: i64,
    j_max: i64,
    max_len: usize,
) -> Result<Vec<CompanionComparison>, ComplexError> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        for j in j_min..=j_max {
            out.push(gentle_companion_check(t, n, j, max_len)?);
        }
    }
    let mut totals: BTreeMap<i64, (usize, usize, usize, bool)> = BTreeMap::new();
    for c in &out {
        let e = totals
            .entry(c.n as i64 + c.j)
            .or_insert((0, 0, 0, true));
        e.0 += c.skew;
        e.1 += c.companion;
        e.2 += c.vsp;
        e.3 &= c.certified;
    }
    for (total, (skew, companion, vsp, certified)) in totals {
        if total > 0 && certified && companion != skew + vsp {
            return Err(ComplexError::TotalDegreeMismatch {
                total,
                skew,
                companion,
                vsp,
            });
        }
    }
    Ok(out)
}
