//! Cohomology blocks `HH^{n,j}` computed by exact elimination, class
//! representatives, and reduction of cocycles to class coordinates.

use skewgentle_core::{FieldSpec, Scalar, SkewGentleTriple};

use crate::cochain::{Cochain, ParallelPair};
use crate::differential::{
    apply_differential, block_pairs, differential_of_pair, BlockPairs, PairIndex, SparseMatrix,
    Variant,
};
use crate::error::ComplexError;
use crate::linalg::{Reducer, SparseVector};

/// Whether the length bound captures everything the block depends on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub max_len: usize,
    /// Block `(n − 1, j)` captured in full (vacuous for `n = 0`).
    pub previous_complete: bool,
    /// Block `(n, j)` captured in full.
    pub current_complete: bool,
}

impl Certificate {
    pub fn is_sound(&self) -> bool {
        self.previous_complete && self.current_complete
    }
}

/// `HH^{n,j}` of `A` (variant `d`) or `A′` (variant `δ`).
#[derive(Clone, Debug)]
pub struct CohomologyBlock {
    pub n: usize,
    pub j: i64,
    pub variant: Variant,
    /// Pairs of block `(n − 1, j)` (columns of the incoming differential).
    pub previous: BlockPairs,
    /// Pairs of block `(n, j)` (columns of the outgoing differential).
    pub current: BlockPairs,
    /// Matrix of `dⁿ⁻¹`; its rows are indexed by `rows_current`.
    pub incoming: SparseMatrix,
    /// Matrix of `dⁿ`; its rows are indexed by `rows_next`.
    pub outgoing: SparseMatrix,
    /// Row labels of `incoming`: the pairs of `current`, followed by any
    /// longer pairs hit by the differential.
    pub rows_current: Vec<ParallelPair>,
    /// Row labels of `outgoing`.
    pub rows_next: Vec<ParallelPair>,
    pub kernel_dimension: usize,
    pub image_rank: usize,
    pub dimension: usize,
    /// One cocycle per basis class.
    pub representatives: Vec<Cochain>,
    pub certificate: Certificate,
    field: FieldSpec,
    index: PairIndex,
    classes: Reducer,
}

/// Coordinates of a cocycle `z = Σ cᵢ·repᵢ + d(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCoordinates {
    pub coefficients: Vec<Scalar>,
    /// The witness `y` (a cochain of degree `n − 1`).
    pub witness: Cochain,
}

impl ClassCoordinates {
    /// True when `z` is a coboundary.
    pub fn is_zero_class(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_zero())
    }
}

/// Computes `HH^{n,j}` with all pairs of length at most `max_len`.
pub fn cohomology(
    t: &SkewGentleTriple,
    n: usize,
    j: i64,
    variant: Variant,
    max_len: usize,
) -> CohomologyBlock {
    let f = t.field();
    let current = block_pairs(t, n, j, max_len);
    let previous = if n == 0 {
        BlockPairs {
            n: 0,
            j,
            max_len,
            pairs: Vec::new(),
            complete: true,
        }
    } else {
        block_pairs(t, n - 1, j, max_len)
    };

    // Kernel of dⁿ on the current columns.
    let mut next_index = PairIndex::default();
    let mut out_cols = Vec::with_capacity(current.pairs.len());
    let mut kernel_reducer = Reducer::new(f);
    let mut kernel = Vec::new();
    for (k, p) in current.pairs.iter().enumerate() {
        let col = next_index.vector_of(&differential_of_pair(t, variant, p));
        if let Some(dep) = kernel_reducer.insert(&col, k) {
            kernel.push(dep);
        }
        out_cols.push(col);
    }

    // Image of dⁿ⁻¹, recorded in a reducer whose labels are the previous
    // columns; class representatives get labels after them.
    let mut index = PairIndex::new(&current.pairs);
    let mut classes = Reducer::new(f);
    let mut in_cols = Vec::with_capacity(previous.pairs.len());
    for (k, p) in previous.pairs.iter().enumerate() {
        let col = index.vector_of(&differential_of_pair(t, variant, p));
        classes.insert(&col, k);
        in_cols.push(col);
    }
    let image_rank = classes.rank();

    let base = previous.pairs.len();
    let mut representatives = Vec::new();
    for kv in &kernel {
        let red = classes.reduce(kv);
        if red.residual.is_zero() {
            continue;
        }
        let rep = red.residual;
        classes.insert(&rep, base + representatives.len());
        representatives.push(cochain_of(f, n, &index, &rep));
    }

    CohomologyBlock {
        n,
        j,
        variant,
        incoming: SparseMatrix {
            columns: in_cols,
            row_count: index.len(),
        },
        outgoing: SparseMatrix {
            columns: out_cols,
            row_count: next_index.len(),
        },
        rows_current: index.pairs().to_vec(),
        rows_next: next_index.pairs().to_vec(),
        kernel_dimension: kernel.len(),
        image_rank,
        dimension: representatives.len(),
        representatives,
        certificate: Certificate {
            max_len,
            previous_complete: previous.complete,
            current_complete: current.complete,
        },
        previous,
        current,
        field: f,
        index,
        classes,
    }
}

fn cochain_of(f: FieldSpec, n: usize, index: &PairIndex, v: &SparseVector) -> Cochain {
    let mut c = Cochain::zero(f, n);
    for (i, x) in v.iter() {
        c.add_term(index.pairs()[i].clone(), x.clone());
    }
    c
}

impl CohomologyBlock {
    /// The block, or [`ComplexError::TruncationUnsound`] if the length bound
    /// does not certify it.
    pub fn certified(&self) -> Result<&Self, ComplexError> {
        if self.certificate.is_sound() {
            Ok(self)
        } else {
            Err(ComplexError::TruncationUnsound {
                n: self.n,
                j: self.j,
            })
        }
    }

    /// Writes `z` as `Σ cᵢ·repᵢ + d(y)`.
    pub fn coboundary_coordinates(
        &self,
        t: &SkewGentleTriple,
        z: &Cochain,
    ) -> Result<ClassCoordinates, ComplexError> {
        let (n, j) = (self.n, self.j);
        if !z.is_zero() && (z.degree() != n || z.internal_degree(t.quiver()) != Some(j)) {
            return Err(ComplexError::WrongBlock { n, j });
        }
        if !apply_differential(t, self.variant, z).is_zero() {
            return Err(ComplexError::NotACocycle { n, j });
        }
        let mut v = SparseVector::new();
        for (p, x) in z.terms() {
            match self.index.get(p) {
                Some(i) => v.add_at(i, x),
                None => return Err(ComplexError::OutsideWindow { n, j }),
            }
        }
        let red = self.classes.reduce(&v);
        if !red.residual.is_zero() {
            return Err(ComplexError::OutsideWindow { n, j });
        }
        let inv = red.multiplier.inv();
        let base = self.previous.pairs.len();
        let mut coefficients = vec![self.field.zero(); self.representatives.len()];
        let mut witness = Cochain::zero(self.field, n.saturating_sub(1));
        for (k, c) in red.combination.iter() {
            let c = c * &inv;
            if k >= base {
                coefficients[k - base] = c;
            } else {
                witness.add_term(self.previous.pairs[k].clone(), c);
            }
        }
        Ok(ClassCoordinates {
            coefficients,
            witness,
        })
    }

    /// True when the cocycle `z` is a coboundary.
    pub fn is_coboundary(&self, t: &SkewGentleTriple, z: &Cochain) -> Result<bool, ComplexError> {
        Ok(self.coboundary_coordinates(t, z)?.is_zero_class())
    }

    /// Rank of a family of cocycles modulo coboundaries.
    pub fn class_rank(&self, t: &SkewGentleTriple, zs: &[Cochain]) -> Result<usize, ComplexError> {
        let mut r = Reducer::new(self.field);
        for (k, z) in zs.iter().enumerate() {
            let coords = self.coboundary_coordinates(t, z)?;
            let v: SparseVector = coords.coefficients.into_iter().enumerate().collect();
            r.insert(&v, k);
        }
        Ok(r.rank())
    }
}
