//! Dynkin–Specht–Wever elements, Lie and `h_{g,1}(k)` membership, and the
//! candidate maximal vectors `φ_[k]` and `φ_[1^k]`.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::rational::{int, Coeff};
use crate::tensor::{
    expansion, omega, power_seed, wedge, PermAlgebraElement, Permutation, SparseTensor, SymplecticSpace,
};
use crate::watermark;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DswRole {
    /// `θ_m = (1 − σ_2) ⋯ (1 − σ_m)`.
    Full,
    /// `θ_P = (1 − s_2)(1 − s_3 s_2) ⋯ (1 − s_{k+1} ⋯ s_2)`.
    Stabilizer,
    /// The full cycle `σ_m = s_{m−1} ⋯ s_1`.
    Cycle,
}

/// A group-algebra element kept in factored form so it can be applied to
/// large tensors one factor at a time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DswElement {
    role: DswRole,
    degree: usize,
    factors: Vec<Permutation>,
}

impl DswElement {
    pub fn role(&self) -> DswRole {
        self.role
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// For `Full`/`Stabilizer`, the permutations `p` of the factors `1 − p`.
    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn to_algebra(&self) -> PermAlgebraElement {
        match self.role {
            DswRole::Cycle => PermAlgebraElement::from_perm(self.factors[0].clone()),
            DswRole::Full | DswRole::Stabilizer => {
                let mut acc = PermAlgebraElement::identity(self.degree);
                for f in &self.factors {
                    acc = &acc * &PermAlgebraElement::one_minus(f.clone());
                }
                acc
            }
        }
    }

    /// `t · self`.
    pub fn apply(&self, t: &SparseTensor) -> Result<SparseTensor> {
        if t.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: t.degree() });
        }
        match self.role {
            DswRole::Cycle => t.permuted(&self.factors[0]),
            DswRole::Full | DswRole::Stabilizer => {
                let mut acc = t.clone();
                for f in &self.factors {
                    acc = acc.one_minus(f)?;
                    watermark::check()?;
                }
                Ok(acc)
            }
        }
    }
}

/// `θ_m`; for `m = 1` the empty product.
pub fn theta(m: usize) -> Result<DswElement> {
    if m == 0 {
        return Err(Error::Precondition("θ_m needs m >= 1".into()));
    }
    Ok(DswElement {
        role: DswRole::Full,
        degree: m,
        factors: (2..=m).map(|i| Permutation::sigma(m, i)).collect(),
    })
}

/// `θ_P` in degree `k + 2`.
pub fn theta_stabilizer(k: usize) -> Result<DswElement> {
    if k == 0 {
        return Err(Error::Precondition("θ_P needs k >= 1".into()));
    }
    let m = k + 2;
    Ok(DswElement {
        role: DswRole::Stabilizer,
        degree: m,
        factors: (2..=k + 1).map(|i| Permutation::sigma_fixing_first(m, i)).collect(),
    })
}

/// `σ_m`, rotating all places right by one.
pub fn full_cycle(m: usize) -> DswElement {
    DswElement {
        role: DswRole::Cycle,
        degree: m,
        factors: vec![Permutation::sigma(m, m)],
    }
}

/// `t · θ_m = m · t`. The zero tensor counts as a Lie element.
pub fn is_lie_element(t: &SparseTensor) -> Result<bool> {
    let m = t.degree();
    if m == 0 {
        return Err(Error::Precondition("degree must be positive".into()));
    }
    Ok(theta(m)?.apply(t)? == t.scale(&int(m as i64)))
}

/// `[v_1, v_2, …, v_m] = [[⋯[v_1, v_2], ⋯], v_m]` expanded in the tensor algebra.
pub fn left_normed_bracket(space: SymplecticSpace, letters: &[usize]) -> Result<SparseTensor> {
    let Some((&first, rest)) = letters.split_first() else {
        return Err(Error::Precondition("bracket needs at least one letter".into()));
    };
    let mut acc = SparseTensor::basis(space, &[first])?;
    for &l in rest {
        let v = SparseTensor::basis(space, &[l])?;
        acc = &acc.tensor(&v)? - &v.tensor(&acc)?;
    }
    Ok(acc)
}

/// Membership in `h_{g,1}(k)`: `t · θ_P = (k + 1) t` and `t · σ_{k+2} = t`.
pub fn is_in_h(t: &SparseTensor, k: usize) -> Result<bool> {
    if t.degree() != k + 2 {
        return Err(Error::DegreeMismatch { expected: k + 2, found: t.degree() });
    }
    if t.permuted(&Permutation::sigma(k + 2, k + 2))? != *t {
        return Ok(false);
    }
    Ok(theta_stabilizer(k)?.apply(t)? == t.scale(&int(k as i64 + 1)))
}

/// `θ_P · (1 + σ + ⋯ + σ^{k+1})` as a group-algebra element.
pub fn averaged_projector(k: usize) -> Result<PermAlgebraElement> {
    let m = k + 2;
    let sigma = Permutation::sigma(m, m);
    let mut sum = PermAlgebraElement::zero(m);
    let mut p = Permutation::identity(m);
    for _ in 0..m {
        sum.add_term(p.clone(), Coeff::one());
        p = p.compose(&sigma);
    }
    Ok(&theta_stabilizer(k)?.to_algebra() * &sum)
}

/// `t · (1 + σ + ⋯ + σ^{m−1})` for the full cycle `σ` of degree `m`.
pub fn cyclic_average(t: &SparseTensor) -> Result<SparseTensor> {
    let m = t.degree();
    let sigma = Permutation::sigma(m, m);
    let mut acc = t.clone();
    let mut cur = t.clone();
    for _ in 1..m {
        cur = cur.permuted(&sigma)?;
        acc = acc.try_add(&cur)?;
        watermark::check()?;
    }
    Ok(acc)
}

/// `t · θ_P · (1 + σ + ⋯ + σ^{k+1})`, applied factor by factor.
pub fn apply_averaged_projector(t: &SparseTensor, k: usize) -> Result<SparseTensor> {
    cyclic_average(&theta_stabilizer(k)?.apply(t)?)
}

/// Which candidate vector: `[k]` (seed `e_1^{⊗k}`) or `[1^k]` (seed `e_1 ∧ ⋯ ∧ e_k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "[k]")]
    Power,
    #[serde(rename = "[1^k]")]
    Wedge,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Power => "[k]",
            Family::Wedge => "[1^k]",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "[k]" | "k" | "power" => Ok(Family::Power),
            "[1^k]" | "1^k" | "wedge" => Ok(Family::Wedge),
            other => Err(Error::Parse(format!("unknown family {other:?}; expected [k] or [1^k]"))),
        }
    }
}

impl Family {
    /// Theorem range: `[k]` needs odd `k ≥ 3`, `[1^k]` needs `k ≡ 1 (mod 4)`,
    /// `k ≥ 5`; both need `g ≥ k + 2`.
    pub fn check_range(self, k: usize, g: usize) -> Result<()> {
        match self {
            Family::Power if k < 3 || k.is_multiple_of(2) => {
                return Err(Error::Precondition(format!("[k] needs k odd and k >= 3, got k = {k}")))
            }
            Family::Wedge if k < 5 || k % 4 != 1 => {
                return Err(Error::Precondition(format!(
                    "[1^k] needs k ≡ 1 (mod 4) and k >= 5, got k = {k} ≡ {} (mod 4)",
                    k % 4
                )))
            }
            _ => {}
        }
        if g < k + 2 {
            return Err(Error::StableRange(format!("need g >= k + 2, got k = {k}, g = {g}")));
        }
        Ok(())
    }

    /// `e_1^{⊗k}` or `e_1 ∧ ⋯ ∧ e_k`.
    pub fn seed(self, space: SymplecticSpace, k: usize) -> Result<SparseTensor> {
        match self {
            Family::Power => Ok(power_seed(space, k)),
            Family::Wedge => wedge(space, &(1..=k).collect::<Vec<_>>()),
        }
    }

    /// Coefficient of `seed · D_{i,i+r}` inside the closed form (before the factor 2).
    pub fn coefficient(self, k: usize, r: usize) -> i128 {
        match self {
            Family::Power => {
                let sign = if (r - 1).is_multiple_of(2) { 1 } else { -1 };
                sign * binomial(k as u64, r as u64 - 1) as i128
            }
            Family::Wedge => {
                let sign = if matches!(r % 4, 2 | 3) { -1 } else { 1 };
                sign * binomial((k as u64 - 1) / 2, (r as u64 - 1) / 2) as i128
            }
        }
    }
}

/// `(ω ⊗ seed) · θ_P · (1 + σ + ⋯ + σ^{k+1})`, theorem range enforced.
pub fn phi_candidate(family: Family, k: usize, g: usize) -> Result<SparseTensor> {
    family.check_range(k, g)?;
    phi_candidate_unchecked(family, k, g)
}

/// As [`phi_candidate`] without the range check, for exploratory runs.
pub fn phi_candidate_unchecked(family: Family, k: usize, g: usize) -> Result<SparseTensor> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let space = SymplecticSpace::new(g)?;
    let start = omega(space).tensor(&family.seed(space, k)?)?;
    apply_averaged_projector(&start, k)
}

/// `2 Σ_{i=1}^{k+1} Σ_{r=1}^{k−i+2} c_r · seed · D_{i,i+r}`.
pub fn closed_form_phi(family: Family, k: usize, g: usize) -> Result<SparseTensor> {
    family.check_range(k, g)?;
    closed_form_phi_unchecked(family, k, g)
}

pub fn closed_form_phi_unchecked(family: Family, k: usize, g: usize) -> Result<SparseTensor> {
    let space = SymplecticSpace::new(g)?;
    let seed = family.seed(space, k)?;
    let mut acc = SparseTensor::zero(space, k + 2);
    for i in 1..=k + 1 {
        for r in 1..=k + 2 - i {
            let c = 2 * family.coefficient(k, r);
            let term = expansion(&seed, i, i + r)?.scale(&Coeff::from_integer(c.into()));
            acc = acc.try_add(&term)?;
        }
    }
    watermark::check()?;
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_tensor;
    use crate::tensor::act_perm;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn h(g: usize) -> SymplecticSpace {
        SymplecticSpace::new(g).unwrap()
    }

    /// Shuffle-form expansion: `Σ_I (−1)^{|I|} x_{I reversed} x_1 x_{complement}`
    /// over subsets `I ⊆ {2..m}`.
    fn shuffle_bracket(space: SymplecticSpace, letters: &[usize]) -> SparseTensor {
        let m = letters.len();
        let mut t = SparseTensor::zero(space, m);
        for mask in 0u32..(1 << (m - 1)) {
            let chosen: Vec<usize> = (2..=m).filter(|&p| mask & (1 << (p - 2)) != 0).collect();
            let rest: Vec<usize> = (2..=m).filter(|&p| mask & (1 << (p - 2)) == 0).collect();
            let mut w: Vec<usize> = chosen.iter().rev().map(|&p| letters[p - 1]).collect();
            w.push(letters[0]);
            w.extend(rest.iter().map(|&p| letters[p - 1]));
            let sign = if chosen.len().is_multiple_of(2) { 1 } else { -1 };
            t.add_term(crate::tensor::word(&w), int(sign));
        }
        t
    }

    fn all_words(alphabet: usize, len: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (1..=alphabet).map(move |l| {
                        let mut v = w.clone();
                        v.push(l);
                        v
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn theta_examples() {
        let t2 = theta(2).unwrap().to_algebra();
        assert_eq!(t2, PermAlgebraElement::one_minus(Permutation::s(2, 1)));
        for m in 1..=7 {
            let t = theta(m).unwrap().to_algebra();
            assert_eq!(&t * &t, t.scale(&int(m as i64)), "m={m}");
        }
        let e12 = SparseTensor::basis(h(1), &[1, 2]).unwrap();
        let want = &e12 - &SparseTensor::basis(h(1), &[2, 1]).unwrap();
        assert_eq!(theta(2).unwrap().apply(&e12).unwrap(), want);
        assert_eq!(want, left_normed_bracket(h(1), &[1, 2]).unwrap());
    }

    #[test]
    fn factored_application_matches_algebra() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in 2..=5 {
            let t = random_tensor(&mut rng, h(2), m, 6);
            let th = theta(m).unwrap();
            assert_eq!(th.apply(&t).unwrap(), act_perm(&t, &th.to_algebra()).unwrap());
            let tp = theta_stabilizer(m).unwrap();
            let u = random_tensor(&mut rng, h(2), m + 2, 6);
            assert_eq!(tp.apply(&u).unwrap(), act_perm(&u, &tp.to_algebra()).unwrap());
        }
    }

    #[test]
    fn dsw_projection_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for m in 1..=6 {
            let t = random_tensor(&mut rng, h(2), m, 8);
            let inv = Coeff::new(1.into(), (m as i64).into());
            let once = theta(m).unwrap().apply(&t).unwrap().scale(&inv);
            let twice = theta(m).unwrap().apply(&once).unwrap().scale(&inv);
            assert_eq!(once, twice);
            assert!(is_lie_element(&once).unwrap());
        }
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(
            theta_stabilizer(1).unwrap().to_algebra(),
            PermAlgebraElement::one_minus(Permutation::s(3, 2))
        );
        for k in 1..=4 {
            let th = theta_stabilizer(k).unwrap().to_algebra();
            assert!(th.iter().all(|(p, _)| p.image(1) == 1));
        }
        for k in 1..=4 {
            for w in all_words(3, k + 2).into_iter().step_by(7) {
                let t = SparseTensor::basis(h(2), &w).unwrap();
                let lhs = theta_stabilizer(k).unwrap().apply(&t).unwrap();
                let v1 = SparseTensor::basis(h(2), &w[..1]).unwrap();
                let rhs = v1.tensor(&left_normed_bracket(h(2), &w[1..]).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn bracket_examples() {
        assert!(left_normed_bracket(h(1), &[1, 1]).unwrap().is_zero());
        assert_eq!(left_normed_bracket(h(2), &[1, 2, 3]).unwrap().len(), 4);
        assert!(!is_lie_element(&SparseTensor::basis(h(1), &[1, 2]).unwrap()).unwrap());
        assert!(is_lie_element(&SparseTensor::zero(h(1), 3)).unwrap());
    }

    #[test]
    fn bracket_matches_shuffle_form() {
        for m in 1..=5 {
            for w in all_words(4, m) {
                let b = left_normed_bracket(h(2), &w).unwrap();
                assert_eq!(b, shuffle_bracket(h(2), &w), "{w:?}");
                assert!(is_lie_element(&b).unwrap());
                let t = SparseTensor::basis(h(2), &w).unwrap();
                assert_eq!(theta(m).unwrap().apply(&t).unwrap(), b);
            }
        }
    }

    #[test]
    fn membership_basics() {
        for k in 1..=4 {
            assert!(!is_in_h(&power_seed(h(k + 2), k + 2), k).unwrap());
            assert!(is_in_h(&SparseTensor::zero(h(2), k + 2), k).unwrap());
        }
        assert!(is_in_h(&power_seed(h(2), 3), 2).is_err());
    }

    #[test]
    fn projector_lands_in_h() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in 1..=4 {
            let g = k + 2;
            let t = random_tensor(&mut rng, h(g), k + 2, 5);
            let p = apply_averaged_projector(&t, k).unwrap();
            assert!(is_in_h(&p, k).unwrap());
            assert_eq!(p, act_perm(&t, &averaged_projector(k).unwrap()).unwrap());
            assert!(apply_averaged_projector(&SparseTensor::zero(h(g), k + 2), k).unwrap().is_zero());
        }
    }

    #[test]
    fn family_gates() {
        assert!(Family::Power.check_range(3, 5).is_ok());
        assert!(Family::Power.check_range(4, 6).is_err());
        assert!(Family::Power.check_range(3, 4).is_err());
        assert!(Family::Wedge.check_range(5, 7).is_ok());
        assert!(Family::Wedge.check_range(7, 9).is_err());
        assert!(Family::Wedge.check_range(1, 3).is_err());
        assert_eq!("[1^k]".parse::<Family>().unwrap(), Family::Wedge);
        assert_eq!(serde_json::to_string(&Family::Power).unwrap(), "\"[k]\"");
    }

    #[test]
    fn small_candidate_matches_closed_form() {
        let direct = phi_candidate(Family::Power, 3, 5).unwrap();
        assert_eq!(direct, closed_form_phi(Family::Power, 3, 5).unwrap());
        assert!(is_in_h(&direct, 3).unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn corollary_identity(seed in any::<u64>(), k in 2usize..=3) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let t = random_tensor(&mut rng, h(k + 2), k + 2, 4);
            let a = apply_averaged_projector(&t, k).unwrap();
            let lhs = theta_stabilizer(k).unwrap().apply(&a).unwrap();
            prop_assert_eq!(lhs, a.scale(&int(k as i64 + 1)));
        }
    }
}
