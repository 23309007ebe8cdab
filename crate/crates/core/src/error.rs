use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("operands live over different algebras")]
    AlgebraMismatch,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("decomposition stalled: {0}")]
    DecompositionStalled(String),
    #[error("module is not indecomposable")]
    NotIndecomposable,
    #[error("module is not regular: {0}")]
    NotRegular(String),
    #[error("invalid tube: {0}")]
    InvalidTube(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unrealizable: {0}")]
    Unrealizable(String),
}

impl Error {
    /// Stable machine-readable tag used in error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidField(_) => "invalid_field",
            Error::Parse(_) => "parse",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::InvalidAlgebra(_) => "invalid_algebra",
            Error::InvalidRepresentation(_) => "invalid_representation",
            Error::AlgebraMismatch => "algebra_mismatch",
            Error::Unsupported(_) => "unsupported",
            Error::DecompositionStalled(_) => "decomposition_stalled",
            Error::NotIndecomposable => "not_indecomposable",
            Error::NotRegular(_) => "not_regular",
            Error::InvalidTube(_) => "invalid_tube",
            Error::Precondition(_) => "precondition",
            Error::Unrealizable(_) => "unrealizable",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
