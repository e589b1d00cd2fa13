//! The operations `∘ᵢ` and `∘` on `𝕂(Γ‖ℬ)`, the Gerstenhaber bracket, and
//! the arrow-count grading `deg_c`.
//!
//! Paths are written `γ = γₘ⋯γ₁` with `γ₁` walked first; position `j` of a
//! path is its `j`-th walked arrow (1-based).

use skewgentle_complex::{Cochain, ParallelPair};
use skewgentle_core::{normal_form, ArrowId, Path, Quiver, Scalar, SkewGentleTriple};

/// `γ ∨ⱼᵃ β`: replaces the `j`-th walked arrow of `γ` by the path `β` when
/// that arrow is `a`; `None` otherwise or when the concatenation is not a
/// path (at the outer positions only the inner endpoint must match).
pub fn vee(q: &Quiver, gamma: &Path, j: usize, a: ArrowId, beta: &Path) -> Option<Path> {
    let arrows = gamma.arrows();
    if j == 0 || j > arrows.len() || arrows[j - 1] != a {
        return None;
    }
    let mut out = Vec::with_capacity(arrows.len() + beta.len());
    out.extend_from_slice(&arrows[..j - 1]);
    out.extend_from_slice(beta.arrows());
    out.extend_from_slice(&arrows[j..]);
    if out.is_empty() {
        return Some(Path::trivial(beta.source()));
    }
    Path::from_traversal(q, out).ok()
}

fn degree_of(q: &Quiver, arrows: &[ArrowId]) -> i64 {
    arrows.iter().map(|&a| q.degree(a)).sum()
}

/// The term `(q, π(α))` with the given sign exponent, dropped when the path
/// is not in `Γ` or `π(α) = 0`.
fn term(t: &SkewGentleTriple, q: Path, alpha: Path, exponent: i64) -> Option<(ParallelPair, Scalar)> {
    if !t.is_gamma_path(&q) {
        return None;
    }
    let alpha = normal_form(t, &alpha)?;
    Some((ParallelPair::new(q, alpha), t.field().sign(exponent)))
}

/// Which reading of the `i = 1` and `i = m` substitution rule to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraftRule {
    /// Graft when the outer arrow of `β` equals the outer arrow of `γ`, and
    /// keep the result when the substituted chain lies in `Γ`.
    Derived,
    /// Graft when `γ`, `η` and `β` share the outer arrow, indexed by `η`.
    Indexed,
}

/// `(γ,α) ∘ᵢ (η,β)` for parallel pairs, `1 ≤ i ≤ m = l(γ)`.
pub fn circ_i_pairs(
    t: &SkewGentleTriple,
    x: &ParallelPair,
    i: usize,
    y: &ParallelPair,
) -> Vec<(ParallelPair, Scalar)> {
    circ_i_pairs_with(t, x, i, y, GraftRule::Derived)
}

/// [`circ_i_pairs`] with an explicit reading of the outer-position rule.
pub fn circ_i_pairs_with(
    t: &SkewGentleTriple,
    x: &ParallelPair,
    i: usize,
    y: &ParallelPair,
    rule: GraftRule,
) -> Vec<(ParallelPair, Scalar)> {
    let q = t.quiver();
    let (gamma, alpha) = (&x.q, &x.alpha);
    let (eta, beta) = (&y.q, &y.alpha);
    let m = gamma.len();
    let n = eta.len();
    let lb = beta.len();
    if m == 0 || i == 0 || i > m || lb == 0 {
        return Vec::new();
    }
    let g = gamma.arrows();
    let b = beta.arrows();
    let e = eta.arrows();
    let deg_gamma = gamma.degree(q);
    let deg_alpha = alpha.degree(q);
    let deg_beta = beta.degree(q);
    let deg_eta = eta.degree(q);
    let mut out = Vec::new();

    if m == 1 {
        // Σⱼ (−1)^{(|α|−|γ|)|β_{l}⋯β_{j+1}|} (η, π(β ∨ⱼ^γ α))
        for jpos in 1..=lb {
            if let Some(p) = vee(q, beta, jpos, g[0], alpha) {
                let after = degree_of(q, &b[jpos..]);
                if let Some(tm) = term(t, eta.clone(), p, (deg_alpha - deg_gamma) * after) {
                    out.push(tm);
                }
            }
        }
        return out;
    }

    let (mi, ni) = (m as i64, n as i64);
    if i == 1 {
        let (graft, arrow) = match rule {
            GraftRule::Derived => (b[lb - 1] == g[0], g[0]),
            GraftRule::Indexed => {
                let outer = if n == 0 { b[lb - 1] } else { e[n - 1] };
                (g[0] == outer && b[lb - 1] == outer, outer)
            }
        };
        if !graft {
            return out;
        }
        let (Some(new_q), Some(new_alpha)) = (
            vee(q, gamma, 1, arrow, eta),
            vee(q, beta, lb, arrow, alpha),
        ) else {
            return out;
        };
        let head = deg_gamma - q.degree(g[0]) + mi - 1;
        let exponent = if n == 0 {
            head * deg_beta + mi - 1
        } else {
            head * (deg_beta - deg_eta) + (mi - 1) * (ni - 1)
        };
        out.extend(term(t, new_q, new_alpha, exponent));
        return out;
    }

    if i == m {
        let (graft, arrow) = match rule {
            GraftRule::Derived => (b[0] == g[m - 1], g[m - 1]),
            GraftRule::Indexed => {
                let outer = if n == 0 { b[0] } else { e[0] };
                (g[m - 1] == outer && b[0] == outer, outer)
            }
        };
        if !graft {
            return out;
        }
        let (Some(new_q), Some(new_alpha)) = (
            vee(q, gamma, m, arrow, eta),
            vee(q, beta, 1, arrow, alpha),
        ) else {
            return out;
        };
        let tail = (deg_alpha - deg_gamma) * (deg_beta - q.degree(b[0]));
        let exponent = if n == 0 {
            (mi - 1) * deg_beta + tail
        } else {
            (mi - 1) * (deg_beta + deg_eta) + tail
        };
        out.extend(term(t, new_q, new_alpha, exponent));
        return out;
    }

    // Interior positions 2 ≤ i ≤ m − 1 (m > 2): only single arrows β act.
    if lb != 1 {
        return out;
    }
    let arrow = b[0];
    let ii = i as i64;
    if n == 0 {
        // γ = βᵐ: (−1)^{(i+1)|β|+m−i} (β^{m−1}, α)
        if g.iter().all(|&a| a == arrow) {
            let shorter = Path::arrow(q, arrow).power(m - 1);
            out.extend(term(
                t,
                shorter,
                alpha.clone(),
                (ii + 1) * q.degree(arrow) + mi - ii,
            ));
        }
        return out;
    }
    // n ≥ 1: β = γᵢ and η begins and ends with β; the result is
    // (γₘ⋯γᵢ₊₁ η γᵢ₋₁⋯γ₁, α) with sign
    // (−1)^{(|γₘ⋯γᵢ₊₁|+m−1)(|η|−|β|)+(m−i)(n−1)}.
    if g[i - 1] != arrow || e[0] != arrow || e[n - 1] != arrow {
        return out;
    }
    if let Some(new_q) = vee(q, gamma, i, arrow, eta) {
        let upper = degree_of(q, &g[i..]);
        let exponent = (upper + mi - 1) * (deg_eta - deg_beta) + (mi - ii) * (ni - 1);
        out.extend(term(t, new_q, alpha.clone(), exponent));
    }
    out
}

/// `(γ,α) ∘ (η,β) = Σᵢ₌₁ᵐ (γ,α) ∘ᵢ (η,β)`.
pub fn circ_pairs(t: &SkewGentleTriple, x: &ParallelPair, y: &ParallelPair) -> Vec<(ParallelPair, Scalar)> {
    (1..=x.q.len())
        .flat_map(|i| circ_i_pairs(t, x, i, y))
        .collect()
}

/// Bilinear `u ∘ᵢ v`.
pub fn circ_i(t: &SkewGentleTriple, u: &Cochain, i: usize, v: &Cochain) -> Cochain {
    bilinear(t, u, v, |x, y| circ_i_pairs(t, x, i, y))
}

/// Bilinear `u ∘ v`; zero when `u` has homological degree 0.
pub fn circ(t: &SkewGentleTriple, u: &Cochain, v: &Cochain) -> Cochain {
    bilinear(t, u, v, |x, y| circ_pairs(t, x, y))
}

fn bilinear(
    t: &SkewGentleTriple,
    u: &Cochain,
    v: &Cochain,
    op: impl Fn(&ParallelPair, &ParallelPair) -> Vec<(ParallelPair, Scalar)>,
) -> Cochain {
    let degree = (u.degree() + v.degree()).saturating_sub(1);
    let mut out = Cochain::zero(t.field(), degree);
    for (x, cx) in u.terms() {
        for (y, cy) in v.terms() {
            let c = cx * cy;
            for (p, s) in op(x, y) {
                out.add_term(p, &c * &s);
            }
        }
    }
    out
}

/// `[u, v] = u∘v − (−1)^{(N_u−1)(N_v−1)} v∘u`, with `N` the total degree of
/// each pair (the sign is evaluated termwise).
pub fn bracket(t: &SkewGentleTriple, u: &Cochain, v: &Cochain) -> Cochain {
    let q = t.quiver();
    let degree = (u.degree() + v.degree()).saturating_sub(1);
    let mut out = Cochain::zero(t.field(), degree);
    for (x, cx) in u.terms() {
        for (y, cy) in v.terms() {
            let c = cx * cy;
            for (p, s) in circ_pairs(t, x, y) {
                out.add_term(p, &c * &s);
            }
            let nx = x.total_degree(q) - 1;
            let ny = y.total_degree(q) - 1;
            let sign = t.field().sign(nx * ny + 1);
            for (p, s) in circ_pairs(t, y, x) {
                out.add_term(p, &(&c * &s) * &sign);
            }
        }
    }
    out
}

/// Number of occurrences of the arrow `c` in a path.
pub fn arrow_count(p: &Path, c: ArrowId) -> i64 {
    p.arrows().iter().filter(|&&a| a == c).count() as i64
}

/// `deg_c(γ, α) = deg_c(α) − deg_c(γ)`.
pub fn deg_c_pair(p: &ParallelPair, c: ArrowId) -> i64 {
    arrow_count(&p.alpha, c) - arrow_count(&p.q, c)
}

/// `deg_c` of a cochain all of whose terms share the same value, or `None`
/// when the terms disagree (or the cochain is zero).
pub fn deg_c(v: &Cochain, c: ArrowId) -> Option<i64> {
    let mut values = v.terms().keys().map(|p| deg_c_pair(p, c));
    let first = values.next()?;
    values.all(|d| d == first).then_some(first)
}
