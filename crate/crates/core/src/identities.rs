//! The tensor identities that assemble the closed forms of `φ_[k]` and
//! `φ_[1^k]`, exposed as checkable functions.

use crate::error::{Error, Result};
use crate::free_lie::{apply_averaged_projector, theta_stabilizer, Family};
use crate::rational::int;
use crate::tensor::{expansion, Permutation, SparseTensor, SymplecticSpace};

fn seed_of(family: Family, k: usize, g: usize) -> Result<SparseTensor> {
    family.seed(SymplecticSpace::new(g)?, k)
}

fn check_r(family: Family, k: usize, r: usize) -> Result<()> {
    if r < 2 || r > k + 1 {
        return Err(Error::Precondition(format!("need 2 <= r <= k + 1 = {}, got r = {r}", k + 1)));
    }
    if family == Family::Wedge && r % 4 != 2 {
        return Err(Error::Precondition(format!("[1^k] needs r ≡ 2 (mod 4), got r = {r}")));
    }
    Ok(())
}

/// `seed · D_{12} · (1 − s_2)(1 − s_3 s_2) ⋯ (1 − s_r ⋯ s_2)`.
pub fn rotation_lhs(family: Family, k: usize, g: usize, r: usize) -> Result<SparseTensor> {
    check_r(family, k, r)?;
    let mut t = expansion(&seed_of(family, k, g)?, 1, 2)?;
    for q in 2..=r {
        t = t.one_minus(&Permutation::sigma_fixing_first(k + 2, q))?;
    }
    Ok(t)
}

/// `Σ_{j=1}^{r} c_j · seed · D_{1,1+j}`, with the family's coefficients at
/// `r − 1` in place of `k`.
pub fn rotation_rhs(family: Family, k: usize, g: usize, r: usize) -> Result<SparseTensor> {
    check_r(family, k, r)?;
    let seed = seed_of(family, k, g)?;
    let mut acc = SparseTensor::zero(seed.space(), k + 2);
    for j in 1..=r {
        let c = family.coefficient(r - 1, j) as i64;
        acc = acc.try_add(&expansion(&seed, 1, 1 + j)?.scale(&int(c)))?;
    }
    Ok(acc)
}

pub fn rotation_identity_holds(family: Family, k: usize, g: usize, r: usize) -> Result<bool> {
    Ok(rotation_lhs(family, k, g, r)? == rotation_rhs(family, k, g, r)?)
}

/// Checks `seed · D_{ij} · σ_{k+2} = seed · D_{i+1,j+1}` for `j < k + 2` and
/// `= −seed · D_{1,i+1}` for `j = k + 2`, over all `1 ≤ i < j ≤ k + 2`.
/// Returns the pairs that fail.
pub fn shift_identity_failures(family: Family, k: usize, g: usize) -> Result<Vec<(usize, usize)>> {
    if k.is_multiple_of(2) {
        return Err(Error::Precondition(format!("shift identity needs odd k, got k = {k}")));
    }
    let seed = seed_of(family, k, g)?;
    let m = k + 2;
    let sigma = Permutation::sigma(m, m);
    let mut failures = Vec::new();
    for i in 1..m {
        for j in i + 1..=m {
            let lhs = expansion(&seed, i, j)?.permuted(&sigma)?;
            let rhs = if j < m { expansion(&seed, i + 1, j + 1)? } else { -expansion(&seed, 1, i + 1)? };
            if lhs != rhs {
                failures.push((i, j));
            }
        }
    }
    Ok(failures)
}

/// `Σ_{j=1}^{k+1} (−1)^{j−1+δ_{j≡2,3 (4)}} C((k−1)/2, ⌊(j−1)/2⌋)`; zero
/// whenever `k ≡ 1 (mod 4)`.
pub fn alternating_binomial_sum(k: usize) -> i128 {
    (1..=k + 1)
        .map(|j| {
            let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
            sign * Family::Wedge.coefficient(k, j)
        })
        .sum()
}

/// `t · θ_P Σσ^i · θ_P = (k + 1) · t · θ_P Σσ^i` for `t` of degree `k + 2`.
pub fn corollary_identity_holds(t: &SparseTensor, k: usize) -> Result<bool> {
    let a = apply_averaged_projector(t, k)?;
    Ok(theta_stabilizer(k)?.apply(&a)? == a.scale(&int(k as i64 + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_identity_small() {
        for r in 2..=4 {
            assert!(rotation_identity_holds(Family::Power, 3, 5, r).unwrap(), "r={r}");
        }
        assert!(rotation_identity_holds(Family::Wedge, 5, 7, 2).unwrap());
        assert!(rotation_identity_holds(Family::Wedge, 5, 7, 6).unwrap());
        assert!(rotation_lhs(Family::Wedge, 5, 7, 4).is_err());
        assert!(rotation_lhs(Family::Power, 3, 5, 5).is_err());
    }

    #[test]
    fn shift_identity_small() {
        assert_eq!(shift_identity_failures(Family::Power, 3, 5).unwrap(), vec![]);
        assert_eq!(shift_identity_failures(Family::Wedge, 5, 7).unwrap(), vec![]);
        assert!(shift_identity_failures(Family::Power, 4, 6).is_err());
    }

    #[test]
    fn alternating_sum() {
        for k in (5..=29).step_by(4) {
            assert_eq!(alternating_binomial_sum(k), 0, "k={k}");
        }
    }
}
