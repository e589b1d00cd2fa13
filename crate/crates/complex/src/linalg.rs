//! Exact sparse linear algebra over a [`FieldSpec`]: an incremental
//! echelon reducer that records, for every stored row, how it was obtained
//! from the inserted input vectors.
//!
//! Over the rationals the elimination is fraction-free (cross-multiplication
//! followed by division by the rational content); over prime fields rows are
//! kept monic.  Pivots are always the smallest index present in a row, so the
//! result depends only on the insertion order.

use std::collections::BTreeMap;

use num_traits::Signed;
use skewgentle_core::field::rational_content;
use skewgentle_core::{FieldSpec, Scalar};

/// A sparse vector: index → nonzero scalar.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVector {
    entries: BTreeMap<usize, Scalar>,
}

impl SparseVector {
    pub fn new() -> Self {
        SparseVector::default()
    }

    pub fn unit(field: FieldSpec, i: usize) -> Self {
        let mut v = SparseVector::new();
        v.entries.insert(i, field.one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries.get(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    /// Smallest index with a nonzero entry.
    pub fn pivot(&self) -> Option<usize> {
        self.entries.keys().next().copied()
    }

    /// Adds `c` at index `i`, dropping the entry if it cancels.
    pub fn add_at(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&i) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.entries.remove(&i);
                }
            }
            None => {
                self.entries.insert(i, c.clone());
            }
        }
    }

    /// `self += c·other`.
    pub fn axpy(&mut self, c: &Scalar, other: &SparseVector) {
        if c.is_zero() {
            return;
        }
        for (i, x) in &other.entries {
            self.add_at(*i, &(c * x));
        }
    }

    pub fn scale(&mut self, c: &Scalar) {
        assert!(!c.is_zero(), "scaling by zero");
        for x in self.entries.values_mut() {
            *x *= c;
        }
    }
}

impl FromIterator<(usize, Scalar)> for SparseVector {
    fn from_iter<I: IntoIterator<Item = (usize, Scalar)>>(iter: I) -> Self {
        let mut v = SparseVector::new();
        for (i, c) in iter {
            v.add_at(i, &c);
        }
        v
    }
}

/// A vector together with its expression in terms of the inputs: the
/// invariant is `vector = Σ history[k] · input[k]`.
#[derive(Clone, Debug)]
struct Tracked {
    vector: SparseVector,
    history: SparseVector,
}

/// Incremental row echelon form with history.
#[derive(Clone, Debug)]
pub struct Reducer {
    field: FieldSpec,
    rows: BTreeMap<usize, Tracked>,
}

/// Result of reducing a vector against the stored rows.
#[derive(Clone, Debug)]
pub struct Reduction {
    /// What is left after eliminating every pivot.
    pub residual: SparseVector,
    /// `λ·v − residual = Σ combination[k]·input[k]`, so that
    /// `v = (combination·inputs + residual) / λ`.
    pub combination: SparseVector,
    /// The overall multiplier `λ` applied to `v` (always nonzero).
    pub multiplier: Scalar,
}

impl Reducer {
    pub fn new(field: FieldSpec) -> Self {
        Reducer {
            field,
            rows: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Number of stored (independent) rows.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn normalize(&self, x: &mut Tracked) {
        let lead = if x.vector.is_zero() {
            &x.history
        } else {
            &x.vector
        };
        let Some(p) = lead.pivot() else { return };
        let factor = if self.field.characteristic() == 0 {
            let rats: Vec<_> = lead
                .entries
                .values()
                .map(|s| s.as_rational().expect("rational scalar").clone())
                .collect();
            let content = rational_content(rats.iter()).expect("nonzero vector");
            let mut f = Scalar::Rational(content).inv();
            if lead.get(p).unwrap().as_rational().unwrap().is_negative() {
                f = -f;
            }
            f
        } else {
            lead.get(p).unwrap().inv()
        };
        if !factor.is_one() {
            x.vector.scale(&factor);
            x.history.scale(&factor);
        }
    }

    /// Eliminates every pivot index from `x`; returns the total multiplier
    /// applied to the original content of `x`.
    fn eliminate(&self, x: &mut Tracked) -> Scalar {
        let mut multiplier = self.field.one();
        let mut cursor = 0usize;
        loop {
            let next = x
                .vector
                .entries
                .range(cursor..)
                .find(|(i, _)| self.rows.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            let Some((p, c)) = next else { break };
            let row = &self.rows[&p];
            let rp = row.vector.get(p).expect("pivot entry").clone();
            if self.field.characteristic() == 0 {
                // x ← rp·x − c·row (fraction-free step).
                if !rp.is_one() {
                    x.vector.scale(&rp);
                    x.history.scale(&rp);
                    multiplier *= &rp;
                }
                let neg = -c;
                x.vector.axpy(&neg, &row.vector);
                x.history.axpy(&neg, &row.history);
            } else {
                let f = -(&c / &rp);
                x.vector.axpy(&f, &row.vector);
                x.history.axpy(&f, &row.history);
            }
            cursor = p + 1;
        }
        multiplier
    }

    /// Reduces `v` against the stored rows without modifying the reducer.
    pub fn reduce(&self, v: &SparseVector) -> Reduction {
        let mut x = Tracked {
            vector: v.clone(),
            history: SparseVector::new(),
        };
        let multiplier = self.eliminate(&mut x);
        // x.vector = λ·v + history·inputs, i.e. λ·v − residual = −history.
        let mut combination = x.history;
        combination.scale(&self.field.from_int(-1));
        Reduction {
            residual: x.vector,
            combination,
            multiplier,
        }
    }

    /// Inserts the input vector `v` under the history label `label`.
    /// Returns `None` if `v` was independent of the stored rows; otherwise
    /// returns the dependency: a combination of input labels (including
    /// `label` with nonzero coefficient) that vanishes.
    pub fn insert(&mut self, v: &SparseVector, label: usize) -> Option<SparseVector> {
        let mut x = Tracked {
            vector: v.clone(),
            history: SparseVector::unit(self.field, label),
        };
        self.eliminate(&mut x);
        self.normalize(&mut x);
        match x.vector.pivot() {
            Some(p) => {
                self.rows.insert(p, x);
                None
            }
            None => Some(x.history),
        }
    }
}
