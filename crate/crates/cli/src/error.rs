use std::fmt;

use mbaudit_core::Error;

/// Process exit codes. These values are a stable contract for scripts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExitCode {
    Holds = 0,
    Fails = 1,
    Parse = 2,
    Inadmissible = 3,
    InconsistentTwist = 4,
}

impl ExitCode {
    pub fn as_i32(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct CliError {
    pub code: ExitCode,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        Self { code: ExitCode::Parse, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InadmissibleCharacter { .. } | Error::InvalidBundle(_) => ExitCode::Inadmissible,
            Error::InconsistentTwist { .. } => ExitCode::InconsistentTwist,
            _ => ExitCode::Parse,
        };
        Self { code, message: e.to_string() }
    }
}
