use num_traits::One;

use super::perm::{PermAlgebraElement, Permutation};
use super::space::SymplecticSpace;
use super::sparse::{SparseTensor, Word};
use crate::error::{Error, Result};
use crate::rational::{int, Coeff};

/// The invariant `ω = Σ_i e_i ⊗ e_i^*`.
pub fn omega(space: SymplecticSpace) -> SparseTensor {
    let mut t = SparseTensor::zero(space, 2);
    for i in 1..=space.dim() {
        let (d, s) = space.dual_unchecked(i);
        t.add_term(Word::from_slice(&[i as u8, d as u8]), int(s));
    }
    t
}

/// `Σ_σ sgn(σ) · e_{w·σ}` for `w = indices`; zero when an index repeats.
pub fn wedge(space: SymplecticSpace, indices: &[usize]) -> Result<SparseTensor> {
    for &i in indices {
        space.check_index(i)?;
    }
    let r = indices.len();
    let mut t = SparseTensor::zero(space, r);
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(t);
    }
    let base: Word = indices.iter().map(|&i| i as u8).collect();
    for p in Permutation::all(r) {
        t.add_term(p.act_on_word(&base), int(p.sign()));
    }
    Ok(t)
}

impl SparseTensor {
    /// `self · σ` under the place-permutation action.
    pub fn permuted(&self, p: &Permutation) -> Result<SparseTensor> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: p.degree() });
        }
        Ok(self.map_words(self.degree(), |w, c, emit| emit(p.act_on_word(w), c.clone())))
    }

    /// `self · (1 − σ)`.
    pub fn one_minus(&self, p: &Permutation) -> Result<SparseTensor> {
        Ok(self - &self.permuted(p)?)
    }
}

/// `t · a` for `a ∈ Q S_m`, extended linearly.
pub fn act_perm(t: &SparseTensor, a: &PermAlgebraElement) -> Result<SparseTensor> {
    if a.degree() != t.degree() {
        return Err(Error::DegreeMismatch { expected: t.degree(), found: a.degree() });
    }
    Ok(t.map_words(t.degree(), |w, c, emit| {
        for (p, x) in a.iter() {
            emit(p.act_on_word(w), c * x);
        }
    }))
}

/// `D_{ij}`: for each `r`, place `e_r` at position `i` and `e_r^*` at
/// position `j` of the result, the original factors filling the other
/// places in order.
pub fn expansion(t: &SparseTensor, i: usize, j: usize) -> Result<SparseTensor> {
    let m = t.degree() + 2;
    if i == 0 || i >= j || j > m {
        return Err(Error::Precondition(format!("D_{{{i},{j}}} needs 1 <= i < j <= {m}")));
    }
    let space = t.space();
    Ok(t.map_words(m, |w, c, emit| {
        for r in 1..=space.dim() {
            let (d, s) = space.dual_unchecked(r);
            let mut out = Word::with_capacity(m);
            let mut rest = w.iter();
            for p in 1..=m {
                if p == i {
                    out.push(r as u8);
                } else if p == j {
                    out.push(d as u8);
                } else {
                    out.push(*rest.next().expect("length checked"));
                }
            }
            let coeff = if s == 1 { c.clone() } else { -c };
            emit(out, coeff);
        }
    }))
}

/// Contracts the first two factors: `e_a ⊗ e_b ⊗ rest ↦ ⟨e_b, e_a⟩ · rest`.
pub fn cont_k(t: &SparseTensor) -> Result<SparseTensor> {
    let m = t.degree();
    if m < 2 {
        return Err(Error::DegreeMismatch { expected: 2, found: m });
    }
    let space = t.space();
    Ok(t.map_words(m - 2, |w, c, emit| {
        let v = space.pairing_unchecked(w[1] as usize, w[0] as usize);
        if v != 0 {
            let x: Coeff = if v == 1 { c.clone() } else { -c };
            emit(Word::from_slice(&w[2..]), x);
        }
    }))
}

/// `e_1 ⊗ ⋯ ⊗ e_1` (`k` factors).
pub fn power_seed(space: SymplecticSpace, k: usize) -> SparseTensor {
    SparseTensor::from_terms(space, k, [(Word::from_elem(1, k), Coeff::one())]).expect("letter 1 is valid")
}
