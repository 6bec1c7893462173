use std::fmt;

/// Failures that end a command before a result document is produced.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input or flags; exit code 2.
    Parse(String),
    /// Well-formed input violating a precondition; exit code 3.
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Precondition(m) => write!(f, "precondition failed: {m}"),
        }
    }
}

impl From<solvlat_core::Error> for CliError {
    fn from(e: solvlat_core::Error) -> Self {
        match e {
            solvlat_core::Error::Parse(m) => CliError::Parse(m),
            other => CliError::Precondition(other.to_string()),
        }
    }
}
