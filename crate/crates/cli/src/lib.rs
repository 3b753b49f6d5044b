//! Command-line surface for `mbaudit`: the audit document format, report
//! rendering and the subcommands.

pub mod commands;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod report;

pub use commands::Outcome;
pub use error::{CliError, ExitCode};
