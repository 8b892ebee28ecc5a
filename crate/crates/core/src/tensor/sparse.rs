use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use super::space::SymplecticSpace;
use crate::error::{Error, Result};
use crate::rational::{from_pq, to_pq, Coeff};
use crate::watermark;

/// A basis monomial `e_{w_1} ⊗ … ⊗ e_{w_m}`, letters 1-based.
pub type Word = SmallVec<[u8; 16]>;

/// Builds a [`Word`] from 1-based letters.
pub fn word(letters: &[usize]) -> Word {
    letters.iter().map(|&l| l as u8).collect()
}

/// Finitely supported element of `H^{⊗m}` with exact coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseTensor {
    space: SymplecticSpace,
    degree: usize,
    terms: FxHashMap<Word, Coeff>,
}

impl SparseTensor {
    pub fn zero(space: SymplecticSpace, degree: usize) -> Self {
        SparseTensor {
            space,
            degree,
            terms: FxHashMap::default(),
        }
    }

    /// `coeff · e_w`, validating every letter.
    pub fn monomial(space: SymplecticSpace, letters: &[usize], coeff: Coeff) -> Result<Self> {
        for &l in letters {
            space.check_index(l)?;
        }
        let mut t = Self::zero(space, letters.len());
        t.add_term(word(letters), coeff);
        Ok(t)
    }

    /// `e_w` with coefficient 1.
    pub fn basis(space: SymplecticSpace, letters: &[usize]) -> Result<Self> {
        Self::monomial(space, letters, Coeff::one())
    }

    pub fn from_terms(
        space: SymplecticSpace,
        degree: usize,
        terms: impl IntoIterator<Item = (Word, Coeff)>,
    ) -> Result<Self> {
        let mut t = Self::zero(space, degree);
        for (w, c) in terms {
            if w.len() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: w.len() });
            }
            for &l in &w {
                space.check_index(l as usize)?;
            }
            t.add_term(w, c);
        }
        Ok(t)
    }

    pub(crate) fn from_map(space: SymplecticSpace, degree: usize, terms: FxHashMap<Word, Coeff>) -> Self {
        watermark::record(terms.len());
        SparseTensor { space, degree, terms }
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    pub fn g(&self) -> usize {
        self.space.g()
    }

    pub fn degree(&self) -> usize {
        self.degree
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

    pub fn coeff(&self, w: &[u8]) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    /// Terms in lexicographic word order.
    pub fn sorted_terms(&self) -> Vec<(&Word, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_unstable_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Adds `c · e_w`, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: Word, c: Coeff) {
        add_into(&mut self.terms, w, c);
        watermark::record(self.terms.len());
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(self.space, self.degree);
        }
        let terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        SparseTensor { space: self.space, degree: self.degree, terms }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::GenusMismatch { left: self.g(), right: other.g() });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_into(&mut out.terms, w.clone(), c.clone());
        }
        watermark::record(out.terms.len());
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::GenusMismatch { left: self.g(), right: other.g() });
        }
        let mut terms = FxHashMap::default();
        terms.reserve(self.len() * other.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                terms.insert(w, x * y);
            }
        }
        Ok(Self::from_map(self.space, self.degree + other.degree, terms))
    }

    /// Applies a linear map on basis words.
    pub(crate) fn map_words<F>(&self, degree: usize, mut f: F) -> Self
    where
        F: FnMut(&Word, &Coeff, &mut dyn FnMut(Word, Coeff)),
    {
        let mut terms = FxHashMap::default();
        for (w, c) in &self.terms {
            f(w, c, &mut |nw, nc| add_into(&mut terms, nw, nc));
        }
        Self::from_map(self.space, degree, terms)
    }

    /// `Some(c)` when `self = c · other` with `other ≠ 0`.
    pub fn ratio_to(&self, other: &Self) -> Option<Coeff> {
        if other.is_zero() || self.space != other.space || self.degree != other.degree {
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
}

pub(crate) fn add_into(terms: &mut FxHashMap<Word, Coeff>, w: Word, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match terms.entry(w) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

impl Neg for &SparseTensor {
    type Output = SparseTensor;

    fn neg(self) -> SparseTensor {
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect();
        SparseTensor { space: self.space, degree: self.degree, terms }
    }
}

impl Neg for SparseTensor {
    type Output = SparseTensor;

    fn neg(self) -> SparseTensor {
        -&self
    }
}

/// Panics on genus or degree mismatch; use [`SparseTensor::try_add`] otherwise.
impl Add for &SparseTensor {
    type Output = SparseTensor;

    fn add(self, rhs: &SparseTensor) -> SparseTensor {
        self.try_add(rhs).expect("incompatible tensors")
    }
}

impl Sub for &SparseTensor {
    type Output = SparseTensor;

    fn sub(self, rhs: &SparseTensor) -> SparseTensor {
        self.try_sub(rhs).expect("incompatible tensors")
    }
}

impl fmt::Debug for SparseTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseTensor(g={}, m={}) {{", self.g(), self.degree)?;
        for (i, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {}·{:?}", to_pq(c), w.as_slice())?;
        }
        write!(f, " }}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    word: Vec<u8>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct TensorRepr {
    degree: usize,
    g: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for SparseTensor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TensorRepr {
            degree: self.degree,
            g: self.g(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(w, c)| TermRepr { word: w.to_vec(), coeff: to_pq(c) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparseTensor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TensorRepr::deserialize(d)?;
        let space = SymplecticSpace::new(repr.g).map_err(D::Error::custom)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let c = from_pq(&t.coeff).map_err(D::Error::custom)?;
            terms.push((Word::from_vec(t.word), c));
        }
        SparseTensor::from_terms(space, repr.degree, terms).map_err(D::Error::custom)
    }
}
