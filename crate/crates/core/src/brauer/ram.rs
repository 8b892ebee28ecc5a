use std::cell::RefCell;
use std::collections::BTreeMap;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::combinatorics::{lr_coefficient, partitions, sk_character, CycleType, Partition};
use crate::error::{Error, Result};

thread_local! {
    static TWISTED: RefCell<FxHashMap<(Partition, usize), BTreeMap<Partition, u64>>> = RefCell::new(FxHashMap::default());
}

fn check_shape(lambda: &Partition, k: usize, g: usize) -> Result<()> {
    let r = lambda.size();
    if r > k || (k - r) % 2 == 1 {
        return Err(Error::DegreeMismatch { expected: k, found: r });
    }
    if lambda.len() > g {
        return Err(Error::Precondition(format!("ℓ({lambda}) exceeds g = {g}")));
    }
    Ok(())
}

/// `ν ↦ Σ_{β even} c^ν_{λ', β}` over `ν ⊢ k`, `ν ⊇ λ'`: the `S_k`-content of
/// `D^λ` under the twisted action.
fn twisted_multiset(lambda: &Partition, k: usize) -> BTreeMap<Partition, u64> {
    let key = (lambda.clone(), k);
    if let Some(hit) = TWISTED.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let inner = lambda.conjugate();
    let evens: Vec<Partition> = partitions(k - lambda.size()).into_iter().filter(Partition::all_parts_even).collect();
    let mut out = BTreeMap::new();
    for nu in partitions(k).into_iter().filter(|nu| nu.contains(&inner)) {
        let m: u64 = evens.iter().map(|beta| lr_coefficient(&nu, &inner, beta)).sum();
        if m > 0 {
            out.insert(nu, m);
        }
    }
    TWISTED.with(|m| m.borrow_mut().insert(key, out.clone()));
    out
}

/// Character of the `B_k(−2g)` irreducible `D^λ` at a permutation of cycle
/// type `class`, where `k = |class|`.
pub fn ram_character(lambda: &Partition, class: &CycleType, g: usize) -> Result<i64> {
    let k = class.size();
    check_shape(lambda, k, g)?;
    Ok(twisted_multiset(lambda, k).iter().map(|(nu, &m)| m as i64 * sk_character(nu, class)).sum())
}

/// Decomposition of `D^λ` restricted to `S_k` with its ordinary action.
pub fn restriction_multiset(lambda: &Partition, k: usize) -> Result<BTreeMap<Partition, u64>> {
    let r = lambda.size();
    if r > k || (k - r) % 2 == 1 {
        return Err(Error::DegreeMismatch { expected: k, found: r });
    }
    Ok(twisted_multiset(lambda, k).into_iter().map(|(nu, m)| (nu.conjugate(), m)).collect())
}

/// Every `λ ⊢ k − 2j` with `ℓ(λ) ≤ g`, by increasing `j`.
pub fn admissible_shapes(k: usize, g: usize) -> Vec<Partition> {
    (0..=k / 2)
        .flat_map(|j| partitions(k - 2 * j))
        .filter(|lam| lam.len() <= g)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub k: usize,
    pub g: usize,
    pub rows: Vec<Partition>,
    pub classes: Vec<CycleType>,
    /// `values[row][class]`
    pub values: Vec<Vec<i64>>,
}

pub fn character_table(k: usize, g: usize) -> Result<CharacterTable> {
    if g == 0 {
        return Err(Error::Precondition("g must be positive".into()));
    }
    let rows = admissible_shapes(k, g);
    let classes = partitions(k);
    let values = rows
        .iter()
        .map(|lam| classes.iter().map(|c| ram_character(lam, c, g)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable { k, g, rows, classes, values })
}
