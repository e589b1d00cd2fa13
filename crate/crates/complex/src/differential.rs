//! The differentials `d` (skew-gentle algebra `A`) and `δ` (gentle companion
//! `A′`) on parallel pairs, block enumeration, and sparse matrices per block.

use std::collections::BTreeMap;

use skewgentle_core::{reduce_product, AlgebraKind, Path, SkewGentleTriple};
use skewgentle_enumerate::{b_paths_between, gamma_paths, long_b_path_exists};

use crate::cochain::{Cochain, ParallelPair};
use crate::error::ComplexError;
use crate::linalg::SparseVector;

/// Which complex: `d` for `A`, `δ` for the gentle companion `A′`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    D,
    Delta,
}

impl Variant {
    pub fn algebra(self) -> AlgebraKind {
        match self {
            Variant::D => AlgebraKind::SkewGentle,
            Variant::Delta => AlgebraKind::Companion,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::D => "d",
            Variant::Delta => "delta",
        }
    }
}

/// The columns of a block `(n, j)`: all pairs `(q, α)` with `q ∈ Γₙ`,
/// `|α| − |q| = j` and `l(α) ≤ max_len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPairs {
    pub n: usize,
    pub j: i64,
    pub max_len: usize,
    pub pairs: Vec<ParallelPair>,
    /// True when no parallel pair of this block has `l(α) > max_len`, i.e.
    /// the block is captured in full.
    pub complete: bool,
}

/// Enumerates the pairs of block `(n, j)` up to `max_len`.
pub fn block_pairs(t: &SkewGentleTriple, n: usize, j: i64, max_len: usize) -> BlockPairs {
    let q = t.quiver();
    let mut pairs = Vec::new();
    let mut complete = true;
    for gamma in gamma_paths(t, n) {
        let (s, e) = (gamma.source(), gamma.target(q));
        let deg = j + gamma.degree(q);
        for alpha in b_paths_between(t, s, e, deg, max_len) {
            pairs.push(ParallelPair::new(gamma.clone(), alpha));
        }
        if long_b_path_exists(t, s, e, deg, max_len) {
            complete = false;
        }
    }
    pairs.sort();
    BlockPairs {
        n,
        j,
        max_len,
        pairs,
        complete,
    }
}

/// `d(q, α)` or `δ(q, α)` as a cochain of degree `n + 1`.
pub fn differential_of_pair(t: &SkewGentleTriple, variant: Variant, pair: &ParallelPair) -> Cochain {
    let quiver = t.quiver();
    let f = t.field();
    let kind = variant.algebra();
    let n = pair.q.len();
    let mut out = Cochain::zero(f, n + 1);
    let (q, alpha) = (&pair.q, &pair.alpha);

    if variant == Variant::D && n >= 1 {
        if let Some(eps) = t.special_power_of(q) {
            let e = Path::arrow(quiver, eps);
            let q1 = q.then(quiver, &e).expect("loop");
            let left = reduce_product(t, kind, &e, alpha);
            let right = reduce_product(t, kind, alpha, &e);
            if let Some(p) = left {
                out.add_term(ParallelPair::new(q1.clone(), p), f.one());
            }
            if n % 2 == 0 {
                if let Some(p) = right {
                    out.add_term(ParallelPair::new(q1.clone(), p), f.from_int(-1));
                }
            } else {
                if let Some(p) = right {
                    out.add_term(ParallelPair::new(q1.clone(), p), f.one());
                }
                out.add_term(ParallelPair::new(q1, alpha.clone()), f.from_int(-1));
            }
            return out;
        }
    }

    let j = pair.internal_degree(quiver);
    let target = q.target(quiver);
    let source = q.source();
    // Σ_{b : bq ∈ Γ} (−1)^{|b| j} (bq, π(bα))
    for &b in quiver.outgoing(target) {
        if let Some(last) = q.last_arrow() {
            if !t.in_s(last, b) {
                continue;
            }
        }
        let bp = Path::arrow(quiver, b);
        let bq = q.then(quiver, &bp).expect("composable");
        if let Some(p) = reduce_product(t, kind, &bp, alpha) {
            let sign = f.sign(quiver.degree(b) * j);
            out.add_term(ParallelPair::new(bq, p), sign);
        }
    }
    // − (−1)ⁿ Σ_{a : qa ∈ Γ} (qa, π(αa))
    for &a in quiver.incoming(source) {
        if let Some(first) = q.first_arrow() {
            if !t.in_s(a, first) {
                continue;
            }
        }
        let ap = Path::arrow(quiver, a);
        let qa = ap.then(quiver, q).expect("composable");
        if let Some(p) = reduce_product(t, kind, alpha, &ap) {
            let sign = f.sign(n as i64 + 1);
            out.add_term(ParallelPair::new(qa, p), sign);
        }
    }
    out
}

/// Linear extension of [`differential_of_pair`].
pub fn apply_differential(t: &SkewGentleTriple, variant: Variant, c: &Cochain) -> Cochain {
    let mut out = Cochain::zero(c.field(), c.degree() + 1);
    for (p, x) in c.terms() {
        out.add_assign(&differential_of_pair(t, variant, p).scale(x));
    }
    out
}

/// A sparse matrix given by its columns; row indices refer to `rows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub columns: Vec<SparseVector>,
    pub row_count: usize,
}

impl SparseMatrix {
    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    /// Number of stored nonzero entries.
    pub fn nonzero_count(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }
}

/// Assigns consecutive indices to parallel pairs, seeded with a block's
/// pairs; pairs outside the seed get fresh indices on demand.
#[derive(Clone, Debug, Default)]
pub struct PairIndex {
    pairs: Vec<ParallelPair>,
    index: BTreeMap<ParallelPair, usize>,
}

impl PairIndex {
    pub fn new(seed: &[ParallelPair]) -> Self {
        let mut ix = PairIndex::default();
        for p in seed {
            ix.intern(p);
        }
        ix
    }

    pub fn intern(&mut self, p: &ParallelPair) -> usize {
        if let Some(&i) = self.index.get(p) {
            return i;
        }
        let i = self.pairs.len();
        self.pairs.push(p.clone());
        self.index.insert(p.clone(), i);
        i
    }

    pub fn get(&self, p: &ParallelPair) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn pairs(&self) -> &[ParallelPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Coordinates of a cochain, interning unseen pairs.
    pub fn vector_of(&mut self, c: &Cochain) -> SparseVector {
        c.terms()
            .iter()
            .map(|(p, x)| (self.intern(p), x.clone()))
            .collect()
    }
}

/// The matrix of `dⁿ` (or `δⁿ`) on block `(n, j)`, with rows indexed by the
/// pairs of block `(n + 1, j)`.
#[derive(Clone, Debug)]
pub struct DifferentialMatrix {
    pub domain: BlockPairs,
    pub codomain: BlockPairs,
    pub matrix: SparseMatrix,
}

/// Builds the matrix of the differential on block `(n, j)`.  Fails with
/// [`ComplexError::TruncationOverflow`] if an image pair is longer than
/// `max_len` (so the codomain block is not captured in full).
pub fn differential(
    t: &SkewGentleTriple,
    n: usize,
    j: i64,
    variant: Variant,
    max_len: usize,
) -> Result<DifferentialMatrix, ComplexError> {
    let domain = block_pairs(t, n, j, max_len);
    let codomain = block_pairs(t, n + 1, j, max_len);
    let index = PairIndex::new(&codomain.pairs);
    let mut columns = Vec::with_capacity(domain.pairs.len());
    for p in &domain.pairs {
        let img = differential_of_pair(t, variant, p);
        let mut col = SparseVector::new();
        for (r, x) in img.terms() {
            match index.get(r) {
                Some(i) => col.add_at(i, x),
                None => {
                    return Err(ComplexError::TruncationOverflow {
                        n,
                        j,
                        pair: r.display(t),
                    })
                }
            }
        }
        columns.push(col);
    }
    let row_count = codomain.pairs.len();
    Ok(DifferentialMatrix {
        domain,
        codomain,
        matrix: SparseMatrix { columns, row_count },
    })
}

/// Checks `d ∘ d = 0` (or `δ ∘ δ = 0`) on every given pair, returning the
/// first pair where it fails together with the nonzero result.
pub fn check_square_zero(
    t: &SkewGentleTriple,
    variant: Variant,
    pairs: &[ParallelPair],
) -> Result<(), (ParallelPair, Cochain)> {
    for p in pairs {
        let dd = apply_differential(t, variant, &differential_of_pair(t, variant, p));
        if !dd.is_zero() {
            return Err((p.clone(), dd));
        }
    }
    Ok(())
}
