use thiserror::Error;

/// Errors raised by the library. The CLI maps each variant onto an exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported construction: {0}")]
    Unsupported(String),

    #[error("crystal too large: {size} elements exceeds cap {cap}")]
    CrystalTooLarge { size: String, cap: usize },

    #[error("denominator bound exceeded: no dilation up to {0} certifies the hull")]
    DenominatorBound(u32),

    #[error("not a polytope: the system is unbounded")]
    Unbounded,

    #[error("empty: the system is infeasible")]
    Empty,

    #[error("dual undefined: {0}")]
    DualUndefined(String),

    #[error("malformed data: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
