use thiserror::Error;

use crate::prop::Mode;

/// A connective received an operand of the wrong mode.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{ctor}` expects a {want} operand, found {got}")]
pub struct ModeError {
    pub ctor: &'static str,
    pub want: Mode,
    pub got: Mode,
}

/// Errors from reading the text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: mode error: {source}")]
    Mode {
        line: usize,
        col: usize,
        #[source]
        source: ModeError,
    },
    #[error("{line}:{col}: persistent sequent holds linear proposition {prop}")]
    PersistentLinear { line: usize, col: usize, prop: String },
}
