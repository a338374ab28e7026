use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{origin}: {message}")]
    Parse { origin: String, message: String },

    #[error("{origin}: {source}")]
    Io {
        origin: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] bialg_core::Error),

    #[error("{failed} of {total} fixtures violate invariants")]
    Corpus { failed: usize, total: usize },
}

impl CliError {
    pub fn parse(origin: &str, message: impl Into<String>) -> Self {
        CliError::Parse {
            origin: origin.to_string(),
            message: message.into(),
        }
    }

    /// 1 usage, 2 rejected input, 3 internal invariant violation.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Parse { .. } => 2,
            CliError::Core(bialg_core::Error::InvariantViolation(_)) => 3,
            CliError::Core(_) => 2,
            CliError::Corpus { .. } => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::Core(bialg_core::Error::InvariantViolation(_)) => "invariant-violation",
            CliError::Core(bialg_core::Error::InvalidBialgebra { .. }) => "verification",
            CliError::Core(bialg_core::Error::Monoid(_)) => "verification",
            CliError::Core(bialg_core::Error::Precondition { .. }) => "precondition",
            CliError::Core(_) => "input",
            CliError::Corpus { .. } => "corpus",
        }
    }
}
