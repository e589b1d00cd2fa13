//! Parallel pairs `(q, α) ∈ Γₙ‖ℬ` and cochains (finite linear combinations
//! of parallel pairs sharing the homological degree `n = l(q)`).

use std::collections::BTreeMap;

use skewgentle_core::{FieldSpec, Path, Quiver, Scalar, SkewGentleTriple};

/// A parallel pair `(q, α)`: `q ∈ Γ`, `α ∈ ℬ` with the same source and
/// target.  Ordered by `q`, then `α` (each by length, then arrows).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParallelPair {
    pub q: Path,
    pub alpha: Path,
}

impl ParallelPair {
    pub fn new(q: Path, alpha: Path) -> Self {
        ParallelPair { q, alpha }
    }

    /// Checked constructor: `q ∈ Γ`, `α ∈ ℬ`, `q ‖ α`.
    pub fn checked(t: &SkewGentleTriple, q: Path, alpha: Path) -> Option<Self> {
        let quiver = t.quiver();
        (t.is_gamma_path(&q) && t.is_b_path(&alpha) && q.is_parallel(quiver, &alpha))
            .then_some(ParallelPair { q, alpha })
    }

    /// External (homological) degree `n = l(q)`.
    pub fn external_degree(&self) -> usize {
        self.q.len()
    }

    /// Internal degree `j = |α| − |q|`.
    pub fn internal_degree(&self, quiver: &Quiver) -> i64 {
        self.alpha.degree(quiver) - self.q.degree(quiver)
    }

    /// Total degree `N = n + j`.
    pub fn total_degree(&self, quiver: &Quiver) -> i64 {
        self.external_degree() as i64 + self.internal_degree(quiver)
    }

    /// Weight `l(α) − l(q)`.
    pub fn weight(&self) -> i64 {
        self.alpha.len() as i64 - self.q.len() as i64
    }

    pub fn display(&self, t: &SkewGentleTriple) -> String {
        format!("({}, {})", t.show(&self.q), t.show(&self.alpha))
    }
}

/// A cochain of homological degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    field: FieldSpec,
    degree: usize,
    terms: BTreeMap<ParallelPair, Scalar>,
}

impl Cochain {
    pub fn zero(field: FieldSpec, degree: usize) -> Self {
        Cochain {
            field,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The single pair with coefficient one.
    pub fn from_pair(field: FieldSpec, pair: ParallelPair) -> Self {
        let mut c = Cochain::zero(field, pair.external_degree());
        c.add_term(pair, field.one());
        c
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Homological degree `n`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<ParallelPair, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, pair: &ParallelPair) -> Scalar {
        self.terms
            .get(pair)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, pair: ParallelPair, c: Scalar) {
        assert_eq!(
            pair.external_degree(),
            self.degree,
            "pair of the wrong homological degree"
        );
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&pair) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&pair);
                }
            }
            None => {
                self.terms.insert(pair, c);
            }
        }
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Cochain) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() && self.degree != other.degree {
            self.degree = other.degree;
        }
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.scale(&self.field.from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        let mut out = Cochain::zero(self.field, self.degree);
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x * c);
        }
        out
    }

    /// Internal degrees occurring in the cochain.
    pub fn internal_degrees(&self, quiver: &Quiver) -> Vec<i64> {
        let mut v: Vec<i64> = self
            .terms
            .keys()
            .map(|p| p.internal_degree(quiver))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// The internal degree if the cochain is nonzero and homogeneous.
    pub fn internal_degree(&self, quiver: &Quiver) -> Option<i64> {
        match self.internal_degrees(quiver).as_slice() {
            [j] => Some(*j),
            _ => None,
        }
    }

    pub fn display(&self, t: &SkewGentleTriple) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let coeff = c.to_string();
            let (sign, mag) = match coeff.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", coeff),
            };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if mag != "1" {
                out.push_str(&mag);
                out.push('·');
            }
            out.push_str(&p.display(t));
        }
        out
    }
}
