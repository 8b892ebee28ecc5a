//! Exact row reduction over sparse tensors.

use num_traits::{One, Zero};

use crate::rational::Coeff;
use crate::tensor::{SparseTensor, Word};

/// Reduced row-echelon basis of a span of tensors. Each basis vector has
/// coefficient 1 at its pivot word and 0 at every other pivot word, so the
/// coordinates of any `v` in the span are `v[pivot_i]`.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(Word, SparseTensor)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a>(vectors: impl IntoIterator<Item = &'a SparseTensor>) -> Self {
        let mut e = Self::new();
        for v in vectors {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[(Word, SparseTensor)] {
        &self.rows
    }

    /// `v` minus its projection onto the current span along the pivots.
    pub fn reduce(&self, v: &SparseTensor) -> SparseTensor {
        let mut r = v.clone();
        for (p, row) in &self.rows {
            let c = r.coeff(p);
            if !c.is_zero() {
                r = &r - &row.scale(&c);
            }
        }
        r
    }

    pub fn contains(&self, v: &SparseTensor) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseTensor) -> bool {
        let r = self.reduce(v);
        let Some((p, c)) = r.sorted_terms().first().map(|(w, c)| ((*w).clone(), (*c).clone())) else {
            return false;
        };
        let r = r.scale(&(Coeff::one() / c));
        for (_, row) in &mut self.rows {
            let x = row.coeff(&p);
            if !x.is_zero() {
                *row = &*row - &r.scale(&x);
            }
        }
        self.rows.push((p, r));
        true
    }

    /// Coordinates of `v` (assumed in the span) in the echelon basis.
    pub fn coordinates(&self, v: &SparseTensor) -> Vec<Coeff> {
        self.rows.iter().map(|(p, _)| v.coeff(p)).collect()
    }
}
