use thiserror::Error;

use crate::document::DocumentError;
use crate::dsl::DslError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("equation: {0}")]
    Dsl(#[from] DslError),
    #[error("series document: {0}")]
    Document(#[from] DocumentError),
    #[error("{0}")]
    Core(#[from] mahler_core::Error),
}

impl CliError {
    /// 1 for a definite negative, 2 for a usage error, 3 when more data is
    /// needed.
    pub fn exit_code(&self) -> i32 {
        use mahler_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Dsl(_) | CliError::Document(_) => 2,
            CliError::Core(e) if e.is_insufficient_data() => 3,
            CliError::Core(E::InvalidArgument(_) | E::InvalidEquation(_)) => 2,
            CliError::Core(_) => 1,
        }
    }
}
