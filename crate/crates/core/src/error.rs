use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("heap is empty")]
    EmptyHeap,
    #[error("index {index} is outside the heap (heap_size = {heap_size})")]
    IndexOutOfHeap { index: usize, heap_size: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("insufficient data for growth fit: {0}")]
    InsufficientData(String),
    #[error("build cost audit failed at n = {n}: {comparisons} comparisons exceed bound {bound}")]
    AuditFailure {
        n: usize,
        comparisons: u64,
        bound: u64,
    },
    #[error("differential failure at step {step}: {detail}")]
    DifferentialFailure { step: usize, detail: String },
    #[error("reproduction failure: {0}")]
    ReproductionFailure(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
