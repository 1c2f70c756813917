//! Explicit derivations of LPC linear logic and a checker for every
//! primitive rule of both judgments, the adjunction rules, weakening,
//! contraction and cut.

mod check;
mod derivation;
mod error;
pub mod mutate;
mod rule;
mod script;
mod structural;

pub use check::{check, check_node, is_valid, Cause, CheckReport, Failure, NodeRecord, Policy};
pub use derivation::{Derivation, Pos};
pub use error::KernelError;
pub use rule::{RuleId, UnknownRule};
pub use script::{derivation_from_sexp, parse_derivation, parse_derivations, print_derivation};
pub use structural::{contract, displaced, replicable, replicate, weaken};
