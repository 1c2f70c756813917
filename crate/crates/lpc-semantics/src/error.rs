use lpc_cutelim::CutError;
use lpc_kernel::KernelError;

#[derive(Debug, thiserror::Error)]
pub enum SemError {
    #[error("{what} would have {size} elements, above the limit of {limit}")]
    DomainTooLarge { what: String, size: u128, limit: u128 },
    #[error("{0}")]
    Mode(String),
    #[error("derivation does not check: {0}")]
    Check(String),
    #[error("invalid model parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
