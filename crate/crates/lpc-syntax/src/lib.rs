//! Propositions of LPC linear logic: three modes (linear, producer,
//! consumer), the duality meta-operation, multiset contexts, sequents and an
//! s-expression text format.

mod context;
pub mod enumerate;
mod error;
mod prop;
mod sequent;
pub mod sexp;
mod text;

pub use context::Context;
pub use error::{ModeError, SyntaxError};
pub use prop::{Mode, Prop};
pub use sequent::{Judgment, Sequent, Side};
pub use text::{
    context_from_sexp, parse_prop, parse_sequent, prop_from_sexp, sequent_from_sexp,
    sequent_from_sexp_unchecked,
};

/// Parse a proposition, panicking on malformed input. For literals in code
/// and tests.
pub fn p(text: &str) -> Prop {
    parse_prop(text).unwrap_or_else(|e| panic!("bad proposition {text:?}: {e}"))
}

/// Parse a sequent, panicking on malformed input.
pub fn s(text: &str) -> Sequent {
    parse_sequent(text).unwrap_or_else(|e| panic!("bad sequent {text:?}: {e}"))
}
