//! Sparse tensors over `H = Q^{2g}` and the operators acting on them.

mod cyclic;
mod ops;
mod perm;
mod space;
mod sparse;
mod young;

pub use cyclic::{cyclic_project, least_rotation, CyclicVector};
pub use ops::{act_perm, cont_k, expansion, omega, power_seed, wedge};
pub use perm::{PermAlgebraElement, Permutation};
pub use space::{dual_basis_vector, pairing, SymplecticSpace};
pub use sparse::{word, SparseTensor, Word};
pub use young::{gl_maximal_vector, sp_maximal_vector, young_symmetrizer};
