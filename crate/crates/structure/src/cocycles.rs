//! Explicit cocycles of `𝕂(Γ‖ℬ)` representing the basis classes: the unit,
//! maximal pairs, the rotation sums `⟨⟨α⟩⟩ₛ` and `⟨⟨C⟩⟩_gr`, and the glued
//! pairs `(c, cα)` and `(bC, b)`.

use skewgentle_complex::{Cochain, ParallelPair};
use skewgentle_core::{ArrowId, Path, SkewGentleTriple};
use skewgentle_enumerate::srot_pow;

/// Smallest `r ≥ 1` such that the cycle is the `(len/r)`-th power of its
/// first `r` arrows.
pub fn period(p: &Path) -> usize {
    let a = p.arrows();
    let l = a.len();
    (1..=l)
        .find(|&r| l % r == 0 && (r..l).all(|i| a[i] == a[i - r]))
        .unwrap_or(0)
}

/// The unit `𝟙 = Σᵢ (eᵢ, eᵢ)`.
pub fn unit(t: &SkewGentleTriple) -> Cochain {
    let f = t.field();
    let mut c = Cochain::zero(f, 0);
    for v in 0..t.quiver().vertex_count() {
        c.add_term(ParallelPair::new(Path::trivial(v), Path::trivial(v)), f.one());
    }
    c
}

/// A single pair with coefficient one.
pub fn pair(t: &SkewGentleTriple, q: Path, alpha: Path) -> Cochain {
    Cochain::from_pair(t.field(), ParallelPair::new(q, alpha))
}

/// `(s(α), α)`.
pub fn at_source(t: &SkewGentleTriple, alpha: &Path) -> Cochain {
    pair(t, Path::trivial(alpha.source()), alpha.clone())
}

/// `(c, c)`.
pub fn derivation(t: &SkewGentleTriple, c: ArrowId) -> Cochain {
    let p = Path::arrow(t.quiver(), c);
    pair(t, p.clone(), p)
}

/// `⟨⟨α⟩⟩ₛ = Σᵢ₌₁ʳ (s(srotⁱα), srotⁱα)` for a cycle `α` of period `r`.
pub fn cocomplete_sum(t: &SkewGentleTriple, alpha: &Path) -> Cochain {
    let f = t.field();
    let mut c = Cochain::zero(f, 0);
    for i in 1..=period(alpha) {
        let rotated = srot_pow(t, alpha, i).expect("cycle");
        for (p, x) in rotated.terms() {
            c.add_term(ParallelPair::new(Path::trivial(p.source()), p.clone()), x.clone());
        }
    }
    c
}

/// `(c, cα)` with `c` the first arrow of the cycle `α`.
pub fn glued_cocomplete(t: &SkewGentleTriple, alpha: &Path) -> Cochain {
    let q = t.quiver();
    let c = Path::arrow(q, alpha.first_arrow().expect("nontrivial cycle"));
    let glued = alpha.then(q, &c).expect("cycle at the source of its first arrow");
    pair(t, c, glued)
}

/// `⟨⟨C⟩⟩_gr = Σᵢ₌₀^{r−1} (−1)^{im + (|c_r|+⋯+|c_{r−i+1}|)|C|} (rotⁱC, s(rotⁱC))`
/// for `C = (c_r⋯c₁)^{m/r}` of length `m` and period `r`.
pub fn complete_sum(t: &SkewGentleTriple, cycle: &Path) -> Cochain {
    let q = t.quiver();
    let f = t.field();
    let m = cycle.len() as i64;
    let r = period(cycle);
    let primitive = &cycle.arrows()[..r];
    let total = cycle.degree(q);
    let mut c = Cochain::zero(f, cycle.len());
    for i in 0..r {
        let rotated = cycle.rot_pow(q, i).expect("cycle");
        let moved: i64 = primitive[r - i..].iter().map(|&a| q.degree(a)).sum();
        let sign = f.sign(i as i64 * m + moved * total);
        let s = Path::trivial(rotated.source());
        c.add_term(ParallelPair::new(rotated, s), sign);
    }
    c
}

/// `(bC, b)` with `b` the first arrow of the complete cycle `C`.
pub fn glued_complete(t: &SkewGentleTriple, cycle: &Path) -> Cochain {
    let q = t.quiver();
    let b = Path::arrow(q, cycle.first_arrow().expect("nontrivial cycle"));
    let glued = cycle.then(q, &b).expect("cycle at the source of its first arrow");
    pair(t, glued, b)
}
