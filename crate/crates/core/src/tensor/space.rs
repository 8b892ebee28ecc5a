use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `H = Q^{2g}` with basis `e_1, …, e_{2g}` and `⟨e_i, e_{i'}⟩ = 1` for
/// `i ≤ g`, where `i' = 2g − i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymplecticSpace {
    g: usize,
}

impl SymplecticSpace {
    /// Letters are stored in a byte, so `g` is capped at 127.
    pub fn new(g: usize) -> Result<Self> {
        if g == 0 || g > 127 {
            return Err(Error::Precondition(format!("genus must lie in 1..=127, got {g}")));
        }
        Ok(SymplecticSpace { g })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn dim(&self) -> usize {
        2 * self.g
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.dim() {
            Err(Error::IndexOutOfRange { index: i, max: self.dim() })
        } else {
            Ok(())
        }
    }

    /// `i ↦ i'`.
    pub fn prime(&self, i: usize) -> usize {
        self.dim() + 1 - i
    }

    pub fn pairing(&self, i: usize, j: usize) -> Result<i64> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.pairing_unchecked(i, j))
    }

    pub(crate) fn pairing_unchecked(&self, i: usize, j: usize) -> i64 {
        if j != self.prime(i) {
            0
        } else if i <= self.g {
            1
        } else {
            -1
        }
    }

    /// `e_i^* = ± e_{i'}` with `⟨e_i, e_i^*⟩ = 1`.
    pub fn dual(&self, i: usize) -> Result<(usize, i64)> {
        self.check_index(i)?;
        Ok(self.dual_unchecked(i))
    }

    pub(crate) fn dual_unchecked(&self, i: usize) -> (usize, i64) {
        (self.prime(i), if i <= self.g { 1 } else { -1 })
    }
}

/// `⟨e_i, e_j⟩` on `Q^{2g}`.
pub fn pairing(g: usize, i: usize, j: usize) -> Result<i64> {
    SymplecticSpace::new(g)?.pairing(i, j)
}

/// Dual basis vector `e_i^*` as `(index, sign)`.
pub fn dual_basis_vector(g: usize, i: usize) -> Result<(usize, i64)> {
    SymplecticSpace::new(g)?.dual(i)
}
