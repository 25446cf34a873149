use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rational function has a pole at z = 0 and no power-series expansion")]
    NotAPowerSeries,
    #[error("insufficient series order: need at least {needed}, got {got}")]
    InsufficientOrder { needed: usize, got: usize },
    #[error("prefix too short: need at least {needed} values, got {got}")]
    PrefixTooShort { needed: usize, got: usize },
    #[error("prefix is inconsistent with the coefficient identity at z^{index}")]
    InconsistentPrefix { index: usize },
    #[error("kernel not closed at the working depth: {0}")]
    NotClosed(String),
    #[error("representation does not generate a finite automaton within {0} states")]
    NotAutomatic(usize),
    #[error("invalid equation: {0}")]
    InvalidEquation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors that mean "more data or larger bounds are needed"
    /// rather than a definite negative answer.
    pub fn is_insufficient_data(&self) -> bool {
        matches!(
            self,
            Error::InsufficientOrder { .. }
                | Error::PrefixTooShort { .. }
                | Error::NotClosed(_)
                | Error::NotAutomatic(_)
        )
    }
}
