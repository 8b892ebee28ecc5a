use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use rustc_hash::FxHashMap;

use super::diagram::{compose_diagrams, BrauerDiagram};
use crate::error::{Error, Result};
use crate::rational::{int, to_pq, Coeff};

/// Element of `B_k(−2g)`: a finitely supported combination of diagrams.
#[derive(Clone, PartialEq, Eq)]
pub struct BrauerElement {
    k: usize,
    g: usize,
    terms: FxHashMap<BrauerDiagram, Coeff>,
}

impl BrauerElement {
    pub fn zero(k: usize, g: usize) -> Self {
        BrauerElement { k, g, terms: FxHashMap::default() }
    }

    pub fn from_diagram(d: BrauerDiagram, g: usize) -> Self {
        let mut e = Self::zero(d.k(), g);
        e.add_term(d, Coeff::one());
        e
    }

    pub fn identity(k: usize, g: usize) -> Self {
        Self::from_diagram(BrauerDiagram::identity(k), g)
    }

    pub fn s(k: usize, g: usize, i: usize) -> Self {
        Self::from_diagram(BrauerDiagram::s(k, i), g)
    }

    pub fn gamma(k: usize, g: usize, i: usize) -> Self {
        Self::from_diagram(BrauerDiagram::gamma(k, i), g)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn g(&self) -> usize {
        self.g
    }

    /// The loop parameter `δ = −2g`.
    pub fn delta(&self) -> i64 {
        -2 * self.g as i64
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

    pub fn iter(&self) -> impl Iterator<Item = (&BrauerDiagram, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &BrauerDiagram) -> Coeff {
        self.terms.get(d).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, d: BrauerDiagram, c: Coeff) {
        assert_eq!(d.k(), self.k, "diagram size mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
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
        let mut out = Self::zero(self.k, self.g);
        for (d, x) in &self.terms {
            out.add_term(d.clone(), x * c);
        }
        out
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.k != other.k {
            return Err(Error::DegreeMismatch { expected: self.k, found: other.k });
        }
        if self.g != other.g {
            return Err(Error::GenusMismatch { left: self.g, right: other.g });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }
}

/// `a · b`: bilinear extension of `D_1 · D_2 = δ^{n(D_1, D_2)} D_1 ∘ D_2`.
pub fn multiply(a: &BrauerElement, b: &BrauerElement) -> Result<BrauerElement> {
    a.check(b)?;
    let delta = Coeff::from_integer(BigInt::from(a.delta()));
    let mut out = BrauerElement::zero(a.k, a.g);
    for (d1, x) in &a.terms {
        for (d2, y) in &b.terms {
            let (d, loops) = compose_diagrams(d1, d2)?;
            let weight: Coeff = Pow::pow(&delta, loops as u32);
            out.add_term(d, x * y * weight);
        }
    }
    Ok(out)
}

impl Add for &BrauerElement {
    type Output = BrauerElement;

    fn add(self, rhs: &BrauerElement) -> BrauerElement {
        self.try_add(rhs).expect("incompatible Brauer elements")
    }
}

impl Sub for &BrauerElement {
    type Output = BrauerElement;

    fn sub(self, rhs: &BrauerElement) -> BrauerElement {
        self.try_add(&rhs.scale(&int(-1))).expect("incompatible Brauer elements")
    }
}

impl Mul for &BrauerElement {
    type Output = BrauerElement;

    fn mul(self, rhs: &BrauerElement) -> BrauerElement {
        multiply(self, rhs).expect("incompatible Brauer elements")
    }
}

impl fmt::Debug for BrauerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0.cmp(b.0));
        let parts: Vec<String> = terms.into_iter().map(|(d, c)| format!("{}·{:?}", to_pq(c), d)).collect();
        write!(f, "B_{}(δ={})[{}]", self.k, self.delta(), parts.join(" + "))
    }
}
