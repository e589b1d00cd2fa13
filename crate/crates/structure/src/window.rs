//! A finite window of bigraded cohomology blocks, computed on demand and
//! cached, and the change of coordinates from the oracle's class
//! representatives to the closed-form basis.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use skewgentle_complex::{cohomology, Cochain, CohomologyBlock, Reducer, SparseVector, Variant};
use skewgentle_core::{Scalar, SkewGentleTriple};

use crate::basis::{closed_form_basis_with, GeneratorTag, Inventory};
use crate::error::StructureError;

/// The bidegrees and path lengths a computation may touch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub n_max: usize,
    pub j_min: i64,
    pub j_max: i64,
    pub max_len: usize,
}

impl Bounds {
    pub fn new(n_max: usize, j_min: i64, j_max: i64, max_len: usize) -> Self {
        Bounds {
            n_max,
            j_min,
            j_max,
            max_len,
        }
    }

    /// A window derived from the arrow degrees: `|j| ≤ min(8, D·max(n_max, 2))`
    /// with `D` the largest absolute arrow degree.
    pub fn auto(t: &SkewGentleTriple, n_max: usize, max_len: usize) -> Self {
        let q = t.quiver();
        let d = (0..q.arrow_count()).map(|a| q.degree(a).abs()).max().unwrap_or(0);
        let span = (d * n_max.max(2) as i64).min(8);
        Bounds::new(n_max, -span, span, max_len)
    }

    pub fn contains(&self, n: usize, j: i64) -> bool {
        n <= self.n_max && self.j_min <= j && j <= self.j_max
    }

    /// Every bidegree of the window, ordered by `(n, j)`.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        (0..=self.n_max).flat_map(move |n| (self.j_min..=self.j_max).map(move |j| (n, j)))
    }
}

/// Lazily computed, certified blocks of `HH^{n,j}(A)` (variant `d`).
#[derive(Debug)]
pub struct CohomologyWindow {
    triple: SkewGentleTriple,
    bounds: Bounds,
    blocks: Mutex<BTreeMap<(usize, i64), Arc<CohomologyBlock>>>,
}

impl CohomologyWindow {
    pub fn new(t: &SkewGentleTriple, bounds: Bounds) -> Self {
        CohomologyWindow {
            triple: t.clone(),
            bounds,
            blocks: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn triple(&self) -> &SkewGentleTriple {
        &self.triple
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    /// Stores a block computed elsewhere (e.g. by a parallel driver).
    pub fn insert(&self, block: CohomologyBlock) {
        let key = (block.n, block.j);
        self.blocks.lock().expect("window lock").insert(key, Arc::new(block));
    }

    /// The block at `(n, j)`, computed if necessary.  Fails outside the
    /// window and on blocks the length bound does not certify.
    pub fn block(&self, n: usize, j: i64) -> Result<Arc<CohomologyBlock>, StructureError> {
        if !self.bounds.contains(n, j) {
            return Err(StructureError::OutsideWindow { n, j });
        }
        let cached = self.blocks.lock().expect("window lock").get(&(n, j)).cloned();
        let block = match cached {
            Some(b) => b,
            None => {
                let b = Arc::new(cohomology(&self.triple, n, j, Variant::D, self.bounds.max_len));
                self.blocks
                    .lock()
                    .expect("window lock")
                    .entry((n, j))
                    .or_insert(b)
                    .clone()
            }
        };
        if !block.certificate.is_sound() {
            return Err(StructureError::Uncertified { n, j });
        }
        Ok(block)
    }

    /// The bidegree of a nonzero homogeneous cochain.
    pub fn locate(&self, z: &Cochain) -> Option<(usize, i64)> {
        Some((z.degree(), z.internal_degree(self.triple.quiver())?))
    }

    /// Coordinates of the cocycle `z` (living in block `(n, j)`) in the
    /// oracle's class representatives.
    pub fn coordinates(&self, n: usize, j: i64, z: &Cochain) -> Result<Vec<Scalar>, StructureError> {
        if z.is_zero() {
            let block = self.block(n, j)?;
            return Ok(vec![self.triple.field().zero(); block.dimension]);
        }
        let block = self.block(n, j)?;
        Ok(block.coboundary_coordinates(&self.triple, z)?.coefficients)
    }

    /// True when `z` and `w` (both in block `(n, j)`) represent the same
    /// class.  The zero cochain lives in every block.
    pub fn same_class(&self, n: usize, j: i64, z: &Cochain, w: &Cochain) -> Result<bool, StructureError> {
        let diff = z.sub(w);
        if diff.is_zero() {
            return Ok(true);
        }
        let block = self.block(n, j)?;
        Ok(block.coboundary_coordinates(&self.triple, &diff)?.is_zero_class())
    }

    /// True when `z` is a coboundary; `z` may be zero.
    pub fn is_zero_class(&self, n: usize, j: i64, z: &Cochain) -> Result<bool, StructureError> {
        if z.is_zero() {
            return Ok(true);
        }
        let block = self.block(n, j)?;
        Ok(block.coboundary_coordinates(&self.triple, z)?.is_zero_class())
    }

    /// The closed-form basis of block `(n, j)` with its change of
    /// coordinates.
    pub fn class_basis(&self, inv: &Inventory, n: usize, j: i64) -> Result<ClassBasis, StructureError> {
        let elements = closed_form_basis_with(&self.triple, inv, n, j, self.bounds.max_len)?;
        ClassBasis::new(self, n, j, elements)
    }
}

/// The closed-form basis of one block, expressed in the oracle's class
/// coordinates, so that any class can be written in closed-form terms.
#[derive(Clone, Debug)]
pub struct ClassBasis {
    pub n: usize,
    pub j: i64,
    pub elements: Vec<GeneratorTag>,
    rows: Reducer,
    dimension: usize,
}

fn to_vector(coords: &[Scalar]) -> SparseVector {
    coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

impl ClassBasis {
    /// Builds the change of coordinates; fails with a mismatch when the
    /// elements are not a basis of the block.
    pub fn new(
        window: &CohomologyWindow,
        n: usize,
        j: i64,
        elements: Vec<GeneratorTag>,
    ) -> Result<Self, StructureError> {
        let t = window.triple();
        let block = window.block(n, j)?;
        let mut rows = Reducer::new(t.field());
        for (k, e) in elements.iter().enumerate() {
            let coords = window.coordinates(n, j, &e.representative)?;
            if rows.insert(&to_vector(&coords), k).is_some() {
                return Err(basis_mismatch(t, n, j, &elements, block.dimension, "dependent element"));
            }
        }
        if rows.rank() != block.dimension {
            return Err(basis_mismatch(t, n, j, &elements, block.dimension, "rank differs from dimension"));
        }
        Ok(ClassBasis {
            n,
            j,
            elements,
            rows,
            dimension: block.dimension,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Coordinates of the cocycle `z` in the closed-form basis.
    pub fn express(&self, window: &CohomologyWindow, z: &Cochain) -> Result<Vec<Scalar>, StructureError> {
        let f = window.triple().field();
        let coords = window.coordinates(self.n, self.j, z)?;
        let red = self.rows.reduce(&to_vector(&coords));
        debug_assert!(red.residual.is_zero(), "full-rank basis");
        let inv = red.multiplier.inv();
        let mut out = vec![f.zero(); self.elements.len()];
        for (k, c) in red.combination.iter() {
            out[k] = c * &inv;
        }
        Ok(out)
    }
}

fn basis_mismatch(
    t: &SkewGentleTriple,
    n: usize,
    j: i64,
    elements: &[GeneratorTag],
    dimension: usize,
    reason: &str,
) -> StructureError {
    StructureError::Mismatch(Box::new(crate::error::StructuredMismatch {
        check: "closed-form basis".into(),
        operands: vec![format!("HH^({n},{j})")],
        computed: format!(
            "[{}]",
            elements
                .iter()
                .map(|e| e.describe(t))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        expected: format!("a basis of dimension {dimension}"),
        witness: reason.into(),
    }))
}
