//! Partitions, tableaux, characters and the closed-form multiplicity rules.

mod branching;
mod characters;
mod lr;
mod multiplicity;
mod partition;
mod tableau;
mod witt;

pub use branching::{gl_dimension, gl_to_sp_branching, pieri_column, sp_dimension};
pub use characters::{class_size, sk_character};
pub use lr::lr_coefficient;
pub use multiplicity::{
    brauer_dim, decomposition_dimension, module_dimension, double_factorial, mult_gl_in_cyclic, mult_gl_in_free_lie, mult_gl_in_h,
    mult_sp_in_module, sp_decomposition, binomial, Source,
};
pub use partition::{partitions, CycleType, Partition};
pub use tableau::{
    hook_length_dimension, kw_multiplicity, kw_multiplicity_with_cap, major_index,
    standard_tableaux, StandardTableau, DEFAULT_TABLEAU_CAP,
};
pub use witt::{mobius, witt_rank};
