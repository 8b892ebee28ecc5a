//! The Brauer algebra `B_k(−2g)`, its twisted right action on `H^{⊗k}`, and
//! Ram's character formula.

mod action;
mod diagram;
mod element;
mod ram;

pub use action::{act_diagram, act_generator, act_twisted, check_relations, relation_failures, span_equality_check, Generator};
pub use diagram::{compose_diagrams, BrauerDiagram};
pub use element::{multiply, BrauerElement};
pub use ram::{admissible_shapes, character_table, ram_character, restriction_multiset, CharacterTable};
