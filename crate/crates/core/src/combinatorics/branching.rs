use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use super::lr::lr_coefficient;
use super::partition::{partitions, Partition};

/// Every `λ` with `λ / μ` a vertical `k`-strip and `ℓ(λ) ≤ n`.
pub fn pieri_column(mu: &Partition, k: usize, n: usize) -> Vec<Partition> {
    fn go(base: &[usize], row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == base.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        if base.len() - row < left {
            return;
        }
        for add in [1, 0] {
            if add > left {
                continue;
            }
            let v = base[row] + add;
            if row > 0 && v > cur[row - 1] {
                continue;
            }
            cur.push(v);
            go(base, row + 1, left - add, cur, out);
            cur.pop();
        }
    }
    if mu.len() > n {
        return Vec::new();
    }
    let rows = n.min(mu.len() + k);
    let base: Vec<usize> = (0..rows).map(|i| mu.part(i)).collect();
    let mut out = Vec::new();
    go(&base, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` whose parts all occur an even number of times.
fn paired_partitions(n: usize) -> Vec<Partition> {
    if n % 2 == 1 {
        return Vec::new();
    }
    partitions(n / 2)
        .into_iter()
        .map(|h| Partition::from_unsorted(h.parts().iter().flat_map(|&p| [p, p]).collect()))
        .collect()
}

/// Restriction from `GL(2g)` to `Sp(2g)`: `λ̄ ↦ Σ_η c^λ_{η, λ̄}` over `η` with
/// paired parts. Valid for `ℓ(λ) ≤ g`.
pub fn gl_to_sp_branching(lambda: &Partition, g: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    let n = lambda.size();
    for eta_size in (0..=n).step_by(2) {
        let etas: Vec<Partition> = paired_partitions(eta_size)
            .into_iter()
            .filter(|e| lambda.contains(e))
            .collect();
        if etas.is_empty() {
            continue;
        }
        for bar in partitions(n - eta_size) {
            if bar.len() > g || !lambda.contains(&bar) {
                continue;
            }
            let m: u64 = etas.iter().map(|e| lr_coefficient(lambda, e, &bar)).sum();
            if m > 0 {
                out.insert(bar, m);
            }
        }
    }
    out
}

/// Dimension of the `GL(n)` irreducible `λ` by the hook-content formula.
pub fn gl_dimension(lambda: &Partition, n: usize) -> BigUint {
    if lambda.len() > n {
        return BigUint::default();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (r, c) in lambda.cells() {
        num *= BigUint::from(n + c - r);
        den *= BigUint::from(lambda.hook(r, c));
    }
    num / den
}

/// Dimension of the `Sp(2g)` irreducible `λ̄` by the Weyl dimension formula.
pub fn sp_dimension(lambda: &Partition, g: usize) -> BigUint {
    if lambda.len() > g {
        return BigUint::default();
    }
    let l: Vec<i64> = (0..g).map(|i| (lambda.part(i) + g - i) as i64).collect();
    let rho: Vec<i64> = (0..g).map(|i| (g - i) as i64).collect();
    let mut q = BigRational::one();
    let frac = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    for i in 0..g {
        q *= frac(l[i], rho[i]);
        for j in i + 1..g {
            q *= frac(l[i] - l[j], rho[i] - rho[j]);
            q *= frac(l[i] + l[j], rho[i] + rho[j]);
        }
    }
    debug_assert!(q.is_integer());
    q.to_integer().to_biguint().unwrap_or_default()
}
