//! `goat` command-line front end.
//!
//! Every command produces its full output as a string before anything is
//! written, so a failure never leaves partial data on stdout.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod format;
pub mod report;

use std::fmt;

pub use args::{Cli, Command};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    VerificationFailed = 1,
    Usage = 2,
    Numeric = 3,
    Io = 4,
}

/// A command failure, mapped onto an exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numeric(goat_core::GoatError),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::Usage,
            CliError::Numeric(_) => ExitCode::Numeric,
            CliError::Io(_) => ExitCode::Io,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Numeric(e) => write!(f, "numeric failure: {e}"),
            CliError::Io(m) => write!(f, "i/o failure: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<goat_core::GoatError> for CliError {
    fn from(e: goat_core::GoatError) -> Self {
        CliError::Numeric(e)
    }
}

/// Rendered output of a command plus the exit code it asks for.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub body: String,
    pub code: ExitCode,
}

impl Outcome {
    pub fn ok(body: String) -> Self {
        Self {
            body,
            code: ExitCode::Success,
        }
    }
}
