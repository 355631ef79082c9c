use std::io;

/// Failures of a command, each mapped to a process exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("input line {line}: {source}")]
    Input { line: usize, source: cpg_core::Error },
    #[error("input line {line}: classification needs a cubic graph")]
    NotCubic { line: usize },
    #[error("{0}")]
    Core(cpg_core::Error),
}

impl From<cpg_core::Error> for CliError {
    fn from(e: cpg_core::Error) -> Self {
        use cpg_core::Error as E;
        match e {
            E::InvalidOrder(_)
            | E::OrderTooLarge(_)
            | E::InvalidSplit { .. }
            | E::ThresholdTooLarge(_)
            | E::MemoryGuard { .. } => CliError::Usage(e.to_string()),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
