use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use num_bigint::BigUint;

use super::branching::{gl_to_sp_branching, sp_dimension};
use super::witt::witt_rank;
use super::partition::{partitions, Partition};
use super::tableau::{hook_length_dimension, kw_multiplicity};
use crate::error::{Error, Result};

/// Which tensor module an `Sp` multiplicity refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// The kernel `h_{g,1}(k)` of the bracket `H ⊗ L(k+1) → L(k+2)`.
    H,
    /// The cyclic quotient `C(k)` of `H^{⊗k}`.
    Cyclic,
    /// The full tensor power `H^{⊗k}`.
    TensorPower,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::H => "h",
            Source::Cyclic => "cyclic",
            Source::TensorPower => "tensor_power",
        })
    }
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h" => Ok(Source::H),
            "cyclic" => Ok(Source::Cyclic),
            "tensor_power" | "tensor-power" => Ok(Source::TensorPower),
            other => Err(Error::Parse(format!("unknown source {other:?}"))),
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `n!!`, with `n!! = 1` for `n ≤ 0`.
pub fn double_factorial(n: i64) -> u128 {
    let mut acc: u128 = 1;
    let mut i = n;
    while i > 1 {
        acc *= i as u128;
        i -= 2;
    }
    acc
}

/// Dimension of the `B_k(−2g)` irreducible indexed by `λ ⊢ k − 2j`:
/// `C(k, 2j) · (2j − 1)!! · f^λ`.
pub fn brauer_dim(lambda: &Partition, k: usize, g: usize) -> Result<u128> {
    let r = lambda.size();
    if r > k || (k - r) % 2 == 1 {
        return Err(Error::DegreeMismatch { expected: k, found: r });
    }
    if lambda.len() > g {
        return Err(Error::Precondition(format!("ℓ({lambda}) exceeds g = {g}")));
    }
    let two_j = (k - r) as u64;
    Ok(binomial(k as u64, two_j) * double_factorial(two_j as i64 - 1) * hook_length_dimension(lambda))
}

/// `GL(n)` multiplicity of `λ ⊢ k` in the cyclic quotient `C_n(k)`.
pub fn mult_gl_in_cyclic(lambda: &Partition, n: usize) -> Result<u64> {
    let k = lambda.size();
    if n < k + 2 {
        return Err(Error::StableRange(format!("need n >= k + 2, got n = {n}, k = {k}")));
    }
    kw_multiplicity(lambda, 0)
}

/// `GL(n)` multiplicity of `λ ⊢ m` in the degree-`m` part of the free Lie algebra.
pub fn mult_gl_in_free_lie(lambda: &Partition, n: usize) -> Result<u64> {
    let m = lambda.size();
    if n < m {
        return Err(Error::StableRange(format!("need n >= m, got n = {n}, m = {m}")));
    }
    kw_multiplicity(lambda, 1 % m.max(1))
}

/// `GL(2g)` multiplicity of `λ ⊢ k + 2` in `h_{g,1}(k)`, computed as
/// `[λ : H ⊗ L(k+1)] − [λ : L(k+2)]`.
pub fn mult_gl_in_h(lambda: &Partition, g: usize) -> Result<u64> {
    let size = lambda.size();
    if size < 3 {
        return Err(Error::Precondition(format!("|λ| = {size} is below k + 2 = 3")));
    }
    let k = size - 2;
    let n = 2 * g;
    if lambda.len() > n || n < k + 4 {
        return Err(Error::StableRange(format!("need ℓ(λ) <= 2g and 2g >= k + 4 (k = {k}, g = {g})")));
    }
    let mut tensor = 0i64;
    for mu in lambda.remove_one_box() {
        tensor += mult_gl_in_free_lie(&mu, n)? as i64;
    }
    let lie = mult_gl_in_free_lie(lambda, n)? as i64;
    let diff = tensor - lie;
    if diff < 0 {
        return Err(Error::Inconsistent(format!("negative multiplicity {diff} for {lambda} in h(k = {k})")));
    }
    Ok(diff as u64)
}

/// Full `Sp(2g)` decomposition of `source` in degree `k`, stable range `g ≥ k + 2`.
pub fn sp_decomposition(source: Source, k: usize, g: usize) -> Result<BTreeMap<Partition, u64>> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    if g < k + 2 {
        return Err(Error::StableRange(format!("need g >= k + 2, got k = {k}, g = {g}")));
    }
    let degree = match source {
        Source::H => k + 2,
        Source::Cyclic | Source::TensorPower => k,
    };
    let mut out = BTreeMap::new();
    for lambda in partitions(degree) {
        let gl = match source {
            Source::H => mult_gl_in_h(&lambda, g)?,
            Source::Cyclic => mult_gl_in_cyclic(&lambda, 2 * g)?,
            Source::TensorPower => hook_length_dimension(&lambda) as u64,
        };
        if gl == 0 {
            continue;
        }
        for (bar, n) in gl_to_sp_branching(&lambda, g) {
            *out.entry(bar).or_insert(0) += n * gl;
        }
    }
    Ok(out)
}

/// `Sp(2g)` multiplicity of `μ̄` in `source`.
pub fn mult_sp_in_module(mu: &Partition, source: Source, k: usize, g: usize) -> Result<u64> {
    Ok(sp_decomposition(source, k, g)?.get(mu).copied().unwrap_or(0))
}

/// Dimension of `source` in degree `k` for `H = Q^{2g}`: `2g·W(2g,k+1) − W(2g,k+2)`
/// for `h`, the necklace count for the cyclic quotient, `(2g)^k` for the tensor power.
pub fn module_dimension(source: Source, k: usize, g: usize) -> BigUint {
    let n = 2 * g as u64;
    match source {
        Source::H => BigUint::from(n as u128 * witt_rank(n, k as u64 + 1) - witt_rank(n, k as u64 + 2)),
        Source::TensorPower => BigUint::from(n).pow(k as u32),
        Source::Cyclic => {
            let phi = |d: u64| (1..=d).filter(|&x| gcd(x, d) == 1).count() as u64;
            let total: BigUint = (1..=k as u64)
                .filter(|d| (k as u64).is_multiple_of(*d))
                .map(|d| BigUint::from(phi(d)) * BigUint::from(n).pow((k as u64 / d) as u32))
                .sum();
            total / BigUint::from(k as u64)
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `Σ mult · dim V_μ` over a decomposition.
pub fn decomposition_dimension(decomposition: &BTreeMap<Partition, u64>, g: usize) -> BigUint {
    decomposition.iter().map(|(mu, &m)| sp_dimension(mu, g) * BigUint::from(m)).sum()
}
