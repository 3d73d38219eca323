//! Command implementations behind the `artinqp` binary. Each command
//! returns its full output and an exit code, so tests can drive them
//! without spawning processes.

pub mod certificate;
pub mod commands;
pub mod graphfile;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{msg} at line {line}{detail}")]
    Input { line: usize, msg: String, detail: String },
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {err}")]
    Io { path: String, err: std::io::Error },
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 1,
            _ => 2,
        }
    }
}

pub const EXIT_QP: i32 = 0;
pub const EXIT_NOT_QP: i32 = 3;

/// Text written to stdout plus the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}
