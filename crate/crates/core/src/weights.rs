//! Weights and raising operators for `GL(2g)` and `Sp(2g)` on tensor space.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::rational::{int, Coeff};
use crate::tensor::{SparseTensor, SymplecticSpace, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Gl,
    Sp,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(Mode::Gl),
            "sp" => Ok(Mode::Sp),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

/// Integer weight: `2g` coordinates for `GL`, `g` for `Sp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// The partition with these parts, if the weight is dominant and non-negative.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.0.iter().any(|&x| x < 0) || self.0.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Partition::new(self.0.iter().map(|&x| x as usize).collect::<Vec<_>>()).ok()
    }

    /// The weight shifted by a root.
    pub fn shifted(&self, root: &Weight) -> Weight {
        Weight(self.0.iter().zip(&root.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_partition() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "{:?}", self.0),
        }
    }
}

/// Weight of a basis word.
pub fn word_weight(space: SymplecticSpace, w: &[u8], mode: Mode) -> Weight {
    let g = space.g();
    match mode {
        Mode::Gl => {
            let mut v = vec![0; 2 * g];
            for &l in w {
                v[l as usize - 1] += 1;
            }
            Weight(v)
        }
        Mode::Sp => {
            let mut v = vec![0; g];
            for &l in w {
                let l = l as usize;
                if l <= g {
                    v[l - 1] += 1;
                } else {
                    v[space.prime(l) - 1] -= 1;
                }
            }
            Weight(v)
        }
    }
}

/// A linear endomorphism of `H`, acting on tensors as a derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieOperator {
    space: SymplecticSpace,
    /// `images[j − 1]` lists `(i, c)` with `X e_j = Σ c e_i`.
    images: Vec<Vec<(usize, Coeff)>>,
    root: Weight,
}

impl LieOperator {
    fn new(space: SymplecticSpace, entries: &[(usize, usize, i64)], root: Weight) -> Self {
        let mut images = vec![Vec::new(); space.dim()];
        for &(i, j, c) in entries {
            images[j - 1].push((i, int(c)));
        }
        LieOperator { space, images, root }
    }

    /// `X e_j`.
    pub fn image(&self, j: usize) -> &[(usize, Coeff)] {
        &self.images[j - 1]
    }

    /// The weight this operator adds.
    pub fn root(&self) -> &Weight {
        &self.root
    }

    /// Matrix entry `X_{ij}`.
    pub fn entry(&self, i: usize, j: usize) -> Coeff {
        self.images[j - 1]
            .iter()
            .find(|(r, _)| *r == i)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Coeff::zero)
    }

    /// `X · (v_1 ⊗ ⋯ ⊗ v_m) = Σ_p v_1 ⊗ ⋯ ⊗ X v_p ⊗ ⋯ ⊗ v_m`.
    pub fn apply(&self, t: &SparseTensor) -> Result<SparseTensor> {
        if t.space() != self.space {
            return Err(Error::GenusMismatch { left: t.g(), right: self.space.g() });
        }
        let mut out = SparseTensor::zero(t.space(), t.degree());
        for (w, c) in t.iter() {
            for p in 0..w.len() {
                for (i, x) in self.image(w[p] as usize) {
                    let mut nw: Word = w.clone();
                    nw[p] = *i as u8;
                    out.add_term(nw, c * x);
                }
            }
        }
        Ok(out)
    }

    /// `⟨Xu, v⟩ + ⟨u, Xv⟩ = 0` on all basis pairs.
    pub fn preserves_form(&self) -> bool {
        let n = self.space.dim();
        (1..=n).all(|u| {
            (1..=n).all(|v| {
                let a: Coeff = self.image(u).iter().map(|(i, c)| c * int(self.space.pairing_unchecked(*i, v))).sum();
                let b: Coeff = self.image(v).iter().map(|(i, c)| c * int(self.space.pairing_unchecked(u, *i))).sum();
                (a + b).is_zero()
            })
        })
    }
}

/// Simple-root raising operators. `GL`: `E_{i,i+1}`. `Sp`: `X_i` with
/// `X_i e_{i+1} = e_i`, `X_i e_{i'} = −e_{(i+1)'}` for `i < g`, and
/// `X_g e_{g'} = e_g`.
pub fn raising_operators(space: SymplecticSpace, mode: Mode) -> Vec<LieOperator> {
    let g = space.g();
    match mode {
        Mode::Gl => (1..2 * g)
            .map(|i| {
                let mut root = vec![0; 2 * g];
                root[i - 1] = 1;
                root[i] = -1;
                LieOperator::new(space, &[(i, i + 1, 1)], Weight(root))
            })
            .collect(),
        Mode::Sp => {
            let mut ops: Vec<LieOperator> = (1..g)
                .map(|i| {
                    let mut root = vec![0; g];
                    root[i - 1] = 1;
                    root[i] = -1;
                    let entries = [(i, i + 1, 1), (space.prime(i + 1), space.prime(i), -1)];
                    LieOperator::new(space, &entries, Weight(root))
                })
                .collect();
            let mut root = vec![0; g];
            root[g - 1] = 2;
            ops.push(LieOperator::new(space, &[(g, space.prime(g), 1)], Weight(root)));
            ops
        }
    }
}

/// Matching lowering operators (negative simple roots) for `Sp`.
pub fn sp_lowering_operators(space: SymplecticSpace) -> Vec<LieOperator> {
    raising_operators(space, Mode::Sp)
        .into_iter()
        .map(|x| {
            let mut entries = Vec::new();
            for j in 1..=space.dim() {
                for (i, c) in x.image(j) {
                    entries.push((j, *i, crate::rational::as_i64(c).expect("integral entry")));
                }
            }
            let root = Weight(x.root().0.iter().map(|v| -v).collect());
            LieOperator::new(space, &entries, root)
        })
        .collect()
}

/// `Some(weight)` if every term of `t` has that weight and every raising
/// operator kills `t`; `None` otherwise.
pub fn is_maximal(t: &SparseTensor, mode: Mode) -> Result<(bool, Option<Weight>)> {
    let Some((w0, _)) = t.iter().next() else {
        return Err(Error::ZeroTensor);
    };
    let space = t.space();
    let weight = word_weight(space, w0, mode);
    if t.iter().any(|(w, _)| word_weight(space, w, mode) != weight) {
        return Ok((false, None));
    }
    for x in raising_operators(space, mode) {
        if !x.apply(t)?.is_zero() {
            return Ok((false, None));
        }
    }
    Ok((true, Some(weight)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions;
    use crate::random::random_tensor;
    use crate::tensor::{gl_maximal_vector, omega, sp_maximal_vector, wedge, word};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn h(g: usize) -> SymplecticSpace {
        SymplecticSpace::new(g).unwrap()
    }

    #[test]
    fn weight_examples() {
        let g = 6;
        let w = word(&[1, 2, 3, 4]);
        assert_eq!(word_weight(h(g), &w, Mode::Sp).0, vec![1, 1, 1, 1, 0, 0]);
        assert_eq!(word_weight(h(g), &word(&[1, 2 * g]), Mode::Sp).0, vec![0; g]);
        let gl = word_weight(h(2), &word(&[1, 1, 1]), Mode::Gl);
        assert_eq!(gl.0, vec![3, 0, 0, 0]);
        assert_eq!(gl.to_string(), "[3]");
        assert_eq!(Weight(vec![0, 0]).to_string(), "[0]");
        assert_eq!(Weight(vec![0, 1]).to_partition(), None);
    }

    #[test]
    fn operator_counts_and_form() {
        for g in 1..=8 {
            assert_eq!(raising_operators(h(g), Mode::Gl).len(), 2 * g - 1);
            let sp = raising_operators(h(g), Mode::Sp);
            assert_eq!(sp.len(), g);
            assert!(sp.iter().all(LieOperator::preserves_form));
            assert!(sp_lowering_operators(h(g)).iter().all(LieOperator::preserves_form));
            let o = omega(h(g));
            for x in sp.iter().chain(&sp_lowering_operators(h(g))) {
                assert!(x.apply(&o).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn raising_shifts_weight_by_root() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let space = h(3);
        for mode in [Mode::Gl, Mode::Sp] {
            for x in raising_operators(space, mode) {
                for _ in 0..10 {
                    let t = random_tensor(&mut rng, space, 3, 1);
                    let Some((w, _)) = t.iter().next() else { continue };
                    let mu = word_weight(space, w, mode);
                    for (v, _) in x.apply(&t).unwrap().iter() {
                        assert_eq!(word_weight(space, v, mode), mu.shifted(x.root()));
                    }
                }
            }
        }
    }

    #[test]
    fn derivation_rule() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let space = h(3);
        for x in raising_operators(space, Mode::Sp) {
            let a = random_tensor(&mut rng, space, 2, 4);
            let b = random_tensor(&mut rng, space, 3, 4);
            let lhs = x.apply(&a.tensor(&b).unwrap()).unwrap();
            let rhs = &x.apply(&a).unwrap().tensor(&b).unwrap() + &a.tensor(&x.apply(&b).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn maximal_vectors() {
        for k in 1..=5 {
            let g = k + 1;
            let w = wedge(h(g), &(1..=k).collect::<Vec<_>>()).unwrap();
            let (ok, wt) = is_maximal(&w, Mode::Sp).unwrap();
            assert!(ok);
            assert_eq!(wt.unwrap().to_partition().unwrap(), Partition::column(k));
        }
        let (ok, wt) = is_maximal(&omega(h(4)), Mode::Sp).unwrap();
        assert!(ok && wt.unwrap().to_string() == "[0]");
        assert!(is_maximal(&SparseTensor::zero(h(2), 2), Mode::Sp).is_err());
        let e2 = SparseTensor::basis(h(2), &[2]).unwrap();
        assert_eq!(is_maximal(&e2, Mode::Sp).unwrap(), (false, None));
    }

    #[test]
    fn gl_maximal_vectors_are_maximal() {
        for n in 1..=5 {
            for lam in partitions(n) {
                let space = h((n + 2).div_ceil(2));
                let v = gl_maximal_vector(space, &lam).unwrap();
                let (ok, wt) = is_maximal(&v, Mode::Gl).unwrap();
                assert!(ok, "{lam}");
                assert_eq!(wt.unwrap().to_partition().unwrap(), lam);
            }
        }
    }

    #[test]
    fn sp_maximal_vectors_are_maximal() {
        for k in 1..=4 {
            let space = h(k + 2);
            for j in 0..=k / 2 {
                for lam in partitions(k - 2 * j) {
                    let v = sp_maximal_vector(space, &lam, j).unwrap();
                    let (ok, wt) = is_maximal(&v, Mode::Sp).unwrap();
                    assert!(ok, "{lam} j={j}");
                    assert_eq!(wt.unwrap().to_partition().unwrap(), lam);
                }
            }
        }
    }
}
