use num_traits::One;

use super::ops::{omega, wedge};
use super::perm::{PermAlgebraElement, Permutation};
use super::space::SymplecticSpace;
use super::sparse::SparseTensor;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::rational::{int, Coeff};

/// Places grouped into consecutive column blocks of sizes `λ'_1, λ'_2, …`;
/// returns `rows[i]` = the `i`-th place of every block long enough (0-based).
fn blocks(lambda: &Partition) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let conj = lambda.conjugate();
    let mut cols = Vec::new();
    let mut start = 0;
    for &h in conj.parts() {
        cols.push((start..start + h).collect::<Vec<_>>());
        start += h;
    }
    let rows = (0..lambda.len())
        .map(|i| cols.iter().filter(|c| c.len() > i).map(|c| c[i]).collect())
        .collect();
    (rows, cols)
}

/// All permutations of `m` places that preserve each group setwise.
fn group_elements(m: usize, groups: &[Vec<usize>]) -> Vec<Permutation> {
    let mut out = vec![(0..m).collect::<Vec<usize>>()];
    for grp in groups {
        let locals = Permutation::all(grp.len());
        let mut next = Vec::with_capacity(out.len() * locals.len());
        for base in &out {
            for l in &locals {
                let mut img = base.clone();
                for (a, &p) in grp.iter().enumerate() {
                    img[p] = grp[l.image(a + 1) - 1];
                }
                next.push(img);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|img| Permutation::from_images(&img.iter().map(|x| x + 1).collect::<Vec<_>>()).expect("group element"))
        .collect()
}

/// Young symmetrizer `c_λ = (Σ_{r ∈ R} r)(Σ_{c ∈ C} sgn(c) c)`, where the
/// places come in column blocks of sizes `λ'_1, λ'_2, …`, `C` permutes
/// within blocks and `R` permutes the `i`-th places across blocks.
///
/// With this layout `w_0 · c_λ = (Π λ_i!) · v_λ` for the word
/// `w_0 = (1, …, λ'_1, 1, …, λ'_2, …)` and `v_λ` = [`gl_maximal_vector`].
pub fn young_symmetrizer(lambda: &Partition) -> PermAlgebraElement {
    let m = lambda.size();
    let (rows, cols) = blocks(lambda);
    let row_sum = PermAlgebraElement::from_terms(m, group_elements(m, &rows).into_iter().map(|p| (p, Coeff::one())));
    let col_sum = PermAlgebraElement::from_terms(
        m,
        group_elements(m, &cols).into_iter().map(|p| {
            let s = p.sign();
            (p, int(s))
        }),
    );
    &row_sum * &col_sum
}

/// `(e_1 ∧ ⋯ ∧ e_{λ'_1}) ⊗ (e_1 ∧ ⋯ ∧ e_{λ'_2}) ⊗ ⋯`.
pub fn gl_maximal_vector(space: SymplecticSpace, lambda: &Partition) -> Result<SparseTensor> {
    if lambda.len() > space.dim() {
        return Err(Error::Precondition(format!("ℓ({lambda}) exceeds 2g = {}", space.dim())));
    }
    let mut t = SparseTensor::basis(space, &[])?;
    for &h in lambda.conjugate().parts() {
        t = t.tensor(&wedge(space, &(1..=h).collect::<Vec<_>>())?)?;
    }
    Ok(t)
}

/// `ω^{⊗j} ⊗ v_λ`.
pub fn sp_maximal_vector(space: SymplecticSpace, lambda: &Partition, j: usize) -> Result<SparseTensor> {
    if lambda.len() > space.g() {
        return Err(Error::Precondition(format!("ℓ({lambda}) exceeds g = {}", space.g())));
    }
    let mut t = SparseTensor::basis(space, &[])?;
    let w = omega(space);
    for _ in 0..j {
        t = t.tensor(&w)?;
    }
    t.tensor(&gl_maximal_vector(space, lambda)?)
}
