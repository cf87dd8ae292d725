use thiserror::Error;

use crate::arith::ArithError;

/// Errors raised by categorical constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("{category} does not provide {capability}")]
    MissingCapability { capability: &'static str, category: String },
    #[error("morphisms do not fit together: {0}")]
    Mismatch(String),
    #[error("no witness makes the datum a well-defined morphism")]
    NotWellDefined,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("a product of categories needs at least one factor")]
    EmptyProduct,
    #[error("{0}")]
    Coherence(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn missing(capability: &'static str, category: impl Into<String>) -> Self {
        Error::MissingCapability { capability, category: category.into() }
    }
}
