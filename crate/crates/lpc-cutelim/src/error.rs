use lpc_kernel::KernelError;
use lpc_syntax::Sequent;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("premise shape mismatch: {0}")]
    Shape(String),
    #[error("input does not check: {0}")]
    Check(String),
    #[error("no cut-free derivation of {sequent}")]
    NoCutFreeForm { sequent: Sequent },
    #[error("unreachable case {case}\n{trace}")]
    Internal { case: String, trace: String },
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
