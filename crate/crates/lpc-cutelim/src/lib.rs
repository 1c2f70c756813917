//! Cut elimination for LPC linear logic as a terminating rewrite on
//! explicit derivations, the dual axioms, and admissible duality rules.

mod dual;
mod elim;
mod error;
mod instances;
mod permute;
mod trace;

pub use dual::{dual_axiom, elaborate_dual, DualAxioms};
pub use elim::{eliminate_all, eliminate_all_traced, eliminate_cut_plus, CutSpec};
pub use error::CutError;
pub use instances::{in_safe_class, pair_cuts};
pub use trace::{EliminationTrace, Measure, Step};
