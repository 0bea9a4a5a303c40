use std::fmt;

use harmonica::Error;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    /// A verification or limit check failed.
    CheckFailed = 1,
    UnknownId = 2,
    /// Parameters outside an entry's domain or the theorem's hypotheses.
    Domain = 3,
    Other = 4,
}

/// What a subcommand produced on success.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    /// Lines for stderr.
    pub notes: Vec<String>,
    pub code: ExitCode,
}

impl Output {
    pub fn ok(stdout: String) -> Self {
        Output {
            stdout,
            notes: Vec::new(),
            code: ExitCode::Ok,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> ExitCode {
        match self {
            CliError::Core(Error::UnknownFormula(_)) => ExitCode::UnknownId,
            CliError::Core(
                Error::OutsideDomain { .. } | Error::Hypothesis(_) | Error::InvalidParameter(_),
            ) => ExitCode::Domain,
            _ => ExitCode::Other,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub type CliResult = Result<Output, CliError>;

pub(crate) fn json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
