//! Exact-arithmetic machinery for locating symplectic irreducible components
//! in the Johnson cokernel of the mapping class group.
//!
//! The crate is organised bottom-up:
//!
//! - [`combinatorics`]: partitions, tableaux, Littlewood–Richardson and
//!   Murnaghan–Nakayama rules, and the closed-form multiplicity formulas.
//! - [`tensor`]: sparse tensors over `H = Q^{2g}` with the symplectic form,
//!   place permutations, expansion and contraction operators.
//! - [`free_lie`]: Dynkin–Specht–Wever elements, Lie and `h_{g,1}(k)`
//!   membership tests, and the candidate maximal vectors.
//! - [`brauer`]: the Brauer algebra `B_k(-2g)`, its twisted action on tensor
//!   space, and character formulas.
//! - [`weights`]: weights and raising operators for `GL(2g)` and `Sp(2g)`.
//! - [`identities`]: the rotation, shift and binomial identities behind the
//!   closed forms of the candidates.
//! - [`detector`]: the end-to-end detection pipeline.
//!
//! Support modules: [`linalg`] (exact row reduction), [`random`] (seeded
//! tensor panels) and [`watermark`] (live-term accounting).
//!
//! All coefficients are arbitrary-precision rationals.

pub mod brauer;
pub mod combinatorics;
pub mod detector;
pub mod error;
pub mod free_lie;
pub mod identities;
pub mod linalg;
pub mod random;
pub mod rational;
pub mod tensor;
pub mod watermark;
pub mod weights;

pub use error::{Error, Result};
pub use rational::Coeff;
