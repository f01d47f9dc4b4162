//! The `pinquad` command line. [`run`] takes the argument list and returns
//! everything the process would print, so tests can drive it in-process.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::Value;
use thiserror::Error;

pub mod args;
mod commands;
mod source;

use args::{Cli, Format};

pub use source::sha256_hex;

/// Exit status for success, usage or input errors, and mathematical failures.
pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MATH: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{input}: {message}")]
    Input { input: String, message: String },
    #[error(transparent)]
    Quad(#[from] pinquad::quad::QuadError),
    #[error(transparent)]
    GGroup(#[from] pinquad::ggroup::GGroupError),
    #[error(transparent)]
    Cochain(#[from] pinquad::cochain::CochainError),
    #[error(transparent)]
    Scx(#[from] pinquad::scx::ScxError),
}

impl CliError {
    fn code(&self) -> u8 {
        use pinquad::ggroup::GGroupError;
        use pinquad::quad::QuadError;
        match self {
            CliError::Quad(QuadError::WuObstruction { .. })
            | CliError::GGroup(GGroupError::Quad(QuadError::WuObstruction { .. })) => EXIT_MATH,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOutput {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Collects records. In jsonl mode each record is one line of JSON with
/// sorted keys; in text mode the human-readable line is printed instead.
pub(crate) struct Emitter {
    format: Format,
    out: String,
    /// Set when a check fails; turns into exit code 2.
    failed: bool,
}

impl Emitter {
    fn new(format: Format) -> Self {
        Emitter {
            format,
            out: String::new(),
            failed: false,
        }
    }

    pub(crate) fn emit(&mut self, record: Value, text: impl AsRef<str>) {
        match self.format {
            Format::Jsonl => {
                self.out.push_str(&serde_json::to_string(&record).expect("json values serialize"));
                self.out.push('\n');
            }
            Format::Text => {
                let text = text.as_ref();
                if !text.is_empty() {
                    self.out.push_str(text);
                    if !text.ends_with('\n') {
                        self.out.push('\n');
                    }
                }
            }
        }
    }

    pub(crate) fn fail(&mut self) {
        self.failed = true;
    }
}

pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => RunOutput {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => RunOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut em = Emitter::new(cli.format);
    match commands::dispatch(cli.command, &mut em) {
        Ok(()) => RunOutput {
            code: if em.failed { EXIT_MATH } else { EXIT_OK },
            stdout: em.out,
            stderr: String::new(),
        },
        Err(e) => RunOutput {
            code: e.code(),
            stdout: em.out,
            stderr: format!("error: {e}\n"),
        },
    }
}
