use std::fmt;

use num_traits::Zero;
use rustc_hash::FxHashMap;
use serde::{Serialize, Serializer};

use super::space::SymplecticSpace;
use super::sparse::{add_into, SparseTensor, Word};
use crate::rational::{to_pq, Coeff};

/// Lexicographically least rotation of `w`.
pub fn least_rotation(w: &[u8]) -> Word {
    let m = w.len();
    let mut best = 0;
    for s in 1..m {
        let better = (0..m)
            .map(|i| (w[(s + i) % m], w[(best + i) % m]))
            .find(|(a, b)| a != b)
            .is_some_and(|(a, b)| a < b);
        if better {
            best = s;
        }
    }
    (0..m).map(|i| w[(best + i) % m]).collect()
}

/// Element of the cyclic quotient `C(k)`, keyed by least rotations.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclicVector {
    space: SymplecticSpace,
    degree: usize,
    terms: FxHashMap<Word, Coeff>,
}

impl CyclicVector {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn g(&self) -> usize {
        self.space.g()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the orbit of `w` (any rotation may be passed).
    pub fn coeff(&self, w: &[u8]) -> Coeff {
        self.terms.get(&least_rotation(w)).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn sorted_terms(&self) -> Vec<(&Word, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_unstable_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// `Some(c)` when `self = c · other` with `other ≠ 0`.
    pub fn ratio_to(&self, other: &Self) -> Option<Coeff> {
        if other.is_zero() || self.degree != other.degree || self.space != other.space {
            return None;
        }
        if self.is_zero() {
            return Some(Coeff::zero());
        }
        if self.len() != other.len() {
            return None;
        }
        let (w, c) = self.terms.iter().next()?;
        let r = c / other.terms.get(w)?;
        other
            .terms
            .iter()
            .all(|(w, c)| self.terms.get(w) == Some(&(c * &r)))
            .then_some(r)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = CyclicVector { space: self.space, degree: self.degree, terms: FxHashMap::default() };
        for (w, x) in &self.terms {
            add_into(&mut out.terms, w.clone(), x * c);
        }
        out
    }
}

/// Projection `H^{⊗k} → C(k)`: sum coefficients over rotation orbits.
pub fn cyclic_project(t: &SparseTensor) -> CyclicVector {
    let mut terms = FxHashMap::default();
    for (w, c) in t.iter() {
        add_into(&mut terms, least_rotation(w), c.clone());
    }
    CyclicVector { space: t.space(), degree: t.degree(), terms }
}

impl fmt::Debug for CyclicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(w, c)| format!("{}·{:?}", to_pq(c), w.as_slice()))
            .collect();
        write!(f, "C(g={}, k={})[{}]", self.g(), self.degree, parts.join(", "))
    }
}

#[derive(Serialize)]
struct OrbitRepr {
    word: Vec<u8>,
    coeff: String,
}

#[derive(Serialize)]
struct CyclicRepr {
    degree: usize,
    g: usize,
    terms: Vec<OrbitRepr>,
}

impl Serialize for CyclicVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CyclicRepr {
            degree: self.degree,
            g: self.g(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(w, c)| OrbitRepr { word: w.to_vec(), coeff: to_pq(c) })
                .collect(),
        }
        .serialize(s)
    }
}
