use lpc_syntax::{Prop, Side, SyntaxError};
use thiserror::Error;

use crate::rule::UnknownRule;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("displacement is defined for persistent sequents only")]
    NotPersistent,
    #[error("{prop} cannot be weakened or contracted on the {side}")]
    NotReplicable { prop: Prop, side: Side },
    #[error("derivation lacks {count} cop(ies) of {prop} on the {side}")]
    MissingCopies { prop: Prop, side: Side, count: usize },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("{line}:{col}: {source}")]
    Rule {
        line: usize,
        col: usize,
        #[source]
        source: UnknownRule,
    },
}
