use crate::format::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}:{source}")]
    Parse { path: String, source: ParseError },
    #[error("the map does not define a morphism: no witness exists")]
    NotAMorphism,
    #[error("{0}")]
    Ring(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    /// 0 success, 1 usage, 2 parse, 3 capability or ring, 4 invariant violation.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse { .. } | CliError::NotAMorphism => 2,
            CliError::Ring(_) => 3,
            CliError::Internal(_) | CliError::Failed(_) => 4,
        }
    }
}

impl From<freyd::Error> for CliError {
    fn from(e: freyd::Error) -> Self {
        use freyd::arith::ArithError as A;
        match e {
            freyd::Error::MissingCapability { .. }
            | freyd::Error::Arith(A::RingMismatch(..) | A::UnsupportedRing { .. } | A::InvalidModulus(_) | A::UnknownRing(_)) => {
                CliError::Ring(e.to_string())
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}
