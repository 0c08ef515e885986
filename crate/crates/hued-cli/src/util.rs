//! Shared plumbing: logging levels, file I/O, exit-code mapping.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Controlled by HUED_LOG={quiet,info,debug}; quiet is the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verbosity {
    Quiet,
    Info,
    Debug,
}

pub fn verbosity() -> Verbosity {
    match std::env::var("HUED_LOG").as_deref() {
        Ok("debug") => Verbosity::Debug,
        Ok("info") => Verbosity::Info,
        _ => Verbosity::Quiet,
    }
}

pub fn info(message: impl AsRef<str>) {
    if verbosity() >= Verbosity::Info {
        eprintln!("{}", message.as_ref());
    }
}

pub fn debug(message: impl AsRef<str>) {
    if verbosity() >= Verbosity::Debug {
        eprintln!("{}", message.as_ref());
    }
}

/// A command failure with its exit code; the message goes to stderr as a
/// single machine-parsable line.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    /// Exit 2: the input was unusable.
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            kind: "input",
            message: message.into(),
        }
    }

    /// Exit 1: the input was usable but failed the requested check.
    pub fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            kind: "verification",
            message: message.into(),
        }
    }
}

impl From<hued::Error> for Failure {
    fn from(e: hued::Error) -> Self {
        match e {
            hued::Error::Parse { .. } => Failure {
                code: 2,
                kind: "parse",
                message: e.to_string(),
            },
            hued::Error::InvalidInput(_) => Failure {
                code: 2,
                kind: "input",
                message: e.to_string(),
            },
            hued::Error::Internal(_) => Failure {
                code: 2,
                kind: "internal",
                message: e.to_string(),
            },
        }
    }
}

pub type CmdResult = Result<(), Failure>;

pub fn read_bytes(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

pub fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

/// Writes to the named file, or stdout when no path is given.
pub fn emit(out: Option<&PathBuf>, bytes: &[u8]) -> CmdResult {
    match out {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            std::io::stdout()
                .write_all(bytes)
                .map_err(|e| Failure::input(format!("cannot write to stdout: {e}")))?;
            Ok(())
        }
    }
}

pub fn emit_line(out: Option<&PathBuf>, text: &str) -> CmdResult {
    let mut bytes = text.as_bytes().to_vec();
    bytes.push(b'\n');
    emit(out, &bytes)
}
