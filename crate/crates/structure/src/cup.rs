//! The cup product on `𝕂(Γ‖ℬ)`:
//! `(γ,α)⌣(γ′,α′) = (−1)^{(|α′|−|γ′|)(m+|γ|)+mn} (γγ′, π(αα′))` when
//! `γγ′ ∈ Γ_{m+n}`, and `0` otherwise.

use skewgentle_complex::{Cochain, ParallelPair};
use skewgentle_core::{reduce_product, AlgebraKind, Path, Scalar, SkewGentleTriple};

/// The product of two parallel pairs as `(pair, sign)`, or `None` when it
/// vanishes.
pub fn cup_pairs(
    t: &SkewGentleTriple,
    kind: AlgebraKind,
    x: &ParallelPair,
    y: &ParallelPair,
) -> Option<(ParallelPair, Scalar)> {
    let q = t.quiver();
    let (gamma, alpha) = (&x.q, &x.alpha);
    let (gamma2, alpha2) = (&y.q, &y.alpha);
    let glued = Path::mul(q, gamma, gamma2)?;
    if !t.is_gamma_path(&glued) {
        return None;
    }
    let product = reduce_product(t, kind, alpha, alpha2)?;
    let (m, n) = (gamma.len() as i64, gamma2.len() as i64);
    let j2 = alpha2.degree(q) - gamma2.degree(q);
    let sign = t.field().sign(j2 * (m + gamma.degree(q)) + m * n);
    Some((ParallelPair::new(glued, product), sign))
}

/// Bilinear cup product in `A`.
pub fn cup(t: &SkewGentleTriple, u: &Cochain, v: &Cochain) -> Cochain {
    cup_in(t, AlgebraKind::SkewGentle, u, v)
}

/// Bilinear cup product in `A` or in the gentle companion `A′`.
pub fn cup_in(t: &SkewGentleTriple, kind: AlgebraKind, u: &Cochain, v: &Cochain) -> Cochain {
    let mut out = Cochain::zero(t.field(), u.degree() + v.degree());
    for (x, cx) in u.terms() {
        for (y, cy) in v.terms() {
            if let Some((p, s)) = cup_pairs(t, kind, x, y) {
                out.add_term(p, &(cx * cy) * &s);
            }
        }
    }
    out
}
