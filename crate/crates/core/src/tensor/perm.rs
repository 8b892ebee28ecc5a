use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::sparse::Word;
use crate::error::{Error, Result};
use crate::rational::{int, Coeff};

/// A permutation of `{1..m}`, stored as 0-based images.
///
/// Acts on words on the right by place permutation, `(w·σ)[p] = w[σ(p)]`,
/// and multiplies as composition, `(στ)(p) = σ(τ(p))`, so that
/// `(w·σ)·τ = w·(στ)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(SmallVec<[u8; 16]>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((0..m as u8).collect())
    }

    /// From 1-based one-line notation `[σ(1), …, σ(m)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in images {
            if x == 0 || x > m || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images.iter().map(|&x| (x - 1) as u8).collect()))
    }

    /// Adjacent transposition `s_i = (i, i+1)` in degree `m`.
    pub fn s(m: usize, i: usize) -> Self {
        assert!(i >= 1 && i < m, "s_{i} undefined in degree {m}");
        let mut p = Self::identity(m);
        p.0.swap(i - 1, i);
        p
    }

    /// `σ_i = s_{i−1} ⋯ s_1`, which rotates the first `i` places right.
    pub fn sigma(m: usize, i: usize) -> Self {
        let mut p = Self::identity(m);
        for j in (1..i).rev() {
            p = p.compose(&Self::s(m, j));
        }
        p
    }

    /// `s_i ⋯ s_2`, rotating places `2..=i+1` right and fixing 1.
    pub fn sigma_fixing_first(m: usize, i: usize) -> Self {
        let mut p = Self::identity(m);
        for j in (2..=i).rev() {
            p = p.compose(&Self::s(m, j));
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// 1-based image of a 1-based point.
    pub fn image(&self, p: usize) -> usize {
        self.0[p - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation(other.0.iter().map(|&q| self.0[q as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = self.0.clone();
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn sign(&self) -> i64 {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut transpositions = 0;
        for start in 0..m {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths, sorted decreasingly.
    pub fn cycle_type(&self) -> Vec<usize> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            if len > 0 {
                out.push(len);
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn act_on_word(&self, w: &[u8]) -> Word {
        self.0.iter().map(|&q| w[q as usize]).collect()
    }

    /// Every permutation of degree `m`, in lexicographic order of images.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..m as u8).collect();
        loop {
            out.push(Permutation(SmallVec::from_slice(&cur)));
            // next lexicographic permutation
            let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

/// Finitely supported element of `Q S_m`.
#[derive(Clone, PartialEq, Eq)]
pub struct PermAlgebraElement {
    degree: usize,
    terms: FxHashMap<Permutation, Coeff>,
}

impl PermAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        PermAlgebraElement { degree, terms: FxHashMap::default() }
    }

    pub fn identity(degree: usize) -> Self {
        Self::from_perm(Permutation::identity(degree))
    }

    pub fn from_perm(p: Permutation) -> Self {
        Self::from_terms(p.degree(), [(p, Coeff::one())])
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Permutation, Coeff)>) -> Self {
        let mut out = Self::zero(degree);
        for (p, c) in terms {
            assert_eq!(p.degree(), degree, "permutation degree mismatch");
            out.add_term(p, c);
        }
        out
    }

    /// `1 − p`.
    pub fn one_minus(p: Permutation) -> Self {
        let m = p.degree();
        Self::from_terms(m, [(Permutation::identity(m), Coeff::one()), (p, int(-1))])
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

    pub fn coeff(&self, p: &Permutation) -> Coeff {
        self.terms.get(p).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &Coeff)> {
        self.terms.iter()
    }

    /// Terms ordered by permutation.
    pub fn sorted_terms(&self) -> Vec<(&Permutation, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_unstable_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, p: Permutation, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
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

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        PermAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        let mut out = Self::zero(self.degree);
        for (p, x) in &self.terms {
            for (q, y) in &other.terms {
                out.add_term(p.compose(q), x * y);
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }
}

impl Neg for &PermAlgebraElement {
    type Output = PermAlgebraElement;

    fn neg(self) -> PermAlgebraElement {
        self.scale(&int(-1))
    }
}

impl Add for &PermAlgebraElement {
    type Output = PermAlgebraElement;

    fn add(self, rhs: &PermAlgebraElement) -> PermAlgebraElement {
        self.try_add(rhs).expect("degree mismatch")
    }
}

impl Sub for &PermAlgebraElement {
    type Output = PermAlgebraElement;

    fn sub(self, rhs: &PermAlgebraElement) -> PermAlgebraElement {
        self.try_add(&-rhs).expect("degree mismatch")
    }
}

impl Mul for &PermAlgebraElement {
    type Output = PermAlgebraElement;

    fn mul(self, rhs: &PermAlgebraElement) -> PermAlgebraElement {
        self.try_mul(rhs).expect("degree mismatch")
    }
}

impl fmt::Debug for PermAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(p, c)| format!("{}·{:?}", crate::rational::to_pq(c), p))
            .collect();
        write!(f, "QS_{}[{}]", self.degree, parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::sparse::word;

    #[test]
    fn adjacent_swap() {
        assert_eq!(Permutation::s(2, 1).act_on_word(&word(&[1, 2])), word(&[2, 1]));
    }

    #[test]
    fn sigma_rotates_right() {
        let w = word(&[1, 2, 3]);
        assert_eq!(Permutation::sigma(3, 3).act_on_word(&w), word(&[3, 1, 2]));
        let w = word(&[1, 2, 3, 4, 5]);
        assert_eq!(Permutation::sigma(5, 3).act_on_word(&w), word(&[3, 1, 2, 4, 5]));
        assert_eq!(Permutation::sigma_fixing_first(5, 2).act_on_word(&w), word(&[1, 3, 2, 4, 5]));
        assert_eq!(Permutation::sigma_fixing_first(5, 3).act_on_word(&w), word(&[1, 4, 2, 3, 5]));
        for m in 1..=7 {
            let c = Permutation::sigma(m, m);
            let mut p = Permutation::identity(m);
            for i in 1..=m {
                p = p.compose(&c);
                assert_eq!(p.is_identity(), i == m);
            }
        }
    }

    #[test]
    fn right_action_axiom() {
        let perms = Permutation::all(4);
        let w = word(&[1, 2, 3, 4]);
        for a in &perms {
            for b in &perms {
                assert_eq!(b.act_on_word(&a.act_on_word(&w)), a.compose(b).act_on_word(&w));
            }
        }
    }

    #[test]
    fn group_basics() {
        assert_eq!(Permutation::all(5).len(), 120);
        for p in Permutation::all(5) {
            assert!(p.compose(&p.inverse()).is_identity());
            let c = p.cycle_type();
            assert_eq!(p.sign(), if (5 - c.len()) % 2 == 0 { 1 } else { -1 });
        }
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert_eq!(Permutation::from_images(&[2, 1]).unwrap(), Permutation::s(2, 1));
    }

    #[test]
    fn algebra_product() {
        let s1 = Permutation::s(3, 1);
        let x = PermAlgebraElement::one_minus(s1.clone());
        // (1 − s)² = 2(1 − s)
        assert_eq!(&x * &x, x.scale(&int(2)));
        assert!((&x - &x).is_zero());
        let y = PermAlgebraElement::from_perm(Permutation::s(3, 2));
        assert!(x.try_mul(&PermAlgebraElement::identity(2)).is_err());
        assert_eq!((&x * &y).len(), 2);
    }
}
