//! Exact region algebra for cylinders and prototype sets.

pub mod automaton;
pub mod cad;
pub mod constraint;
pub mod program;
pub mod region;
pub mod table;
pub mod validity;

pub use automaton::{
    explore_automaton, prototype_step, shared_automaton, Automaton, PrototypeState, Trace,
};
pub use constraint::GenCircle;
pub use program::{mirror_conjugate_state, verify_folding_program, FoldMap, ProgramReport};
pub use region::{cylinder_one, invert_region, translate_region, Region};
pub use validity::{check_validity, is_full, is_valid, Validity};
