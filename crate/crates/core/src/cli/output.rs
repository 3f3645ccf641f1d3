//! Report envelopes, run manifests, exit codes and CSV series.

use crate::error::{Error, Result};
use crate::io::{round_sig, to_report_json};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    /// Success, feasible, found, passive.
    Ok = 0,
    /// Infeasible, not found, not passive.
    Negative = 1,
    /// Malformed or invalid input.
    Input = 2,
    /// A sufficient condition failed; nothing concluded.
    Inconclusive = 3,
    /// Solver or internal failure.
    Internal = 4,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }

    /// The exit code for a library error.
    pub fn for_error(e: &Error) -> Self {
        match e {
            Error::Solver(_) => Exit::Internal,
            _ => Exit::Input,
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Exit::Ok
        } else {
            Exit::Negative
        }
    }
}

/// Digest of one input file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputDigest {
    pub role: String,
    pub path: String,
    pub sha256: String,
}

/// Reproducibility record attached to every report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub seed: Option<u64>,
    pub tool_version: String,
}

/// Collects the input files a command reads.
#[derive(Debug)]
pub struct Inputs {
    digests: Vec<InputDigest>,
}

impl Inputs {
    pub fn new() -> Self {
        Self { digests: Vec::new() }
    }

    /// Records `path` under `role` and returns it for reading.
    pub fn add<'a>(&mut self, role: &str, path: &'a Path) -> Result<&'a Path> {
        let bytes = std::fs::read(path).map_err(|e| {
            Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
        })?;
        self.digests.push(InputDigest {
            role: role.to_string(),
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
        });
        Ok(path)
    }

    pub fn into_manifest(self, command: &str, seed: Option<u64>) -> RunManifest {
        RunManifest {
            command: command.to_string(),
            inputs: self.digests,
            seed,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// A numeric series written as CSV.
#[derive(Debug)]
pub struct Series {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Series {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    /// Formats a cell with the report precision; infinities as `inf`/`-inf`.
    fn cell(x: f64) -> String {
        if x == f64::INFINITY {
            "inf".into()
        } else if x == f64::NEG_INFINITY {
            "-inf".into()
        } else {
            round_sig(x).to_string()
        }
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path)
            .map_err(|e| Error::Io(std::io::Error::other(format!("{}: {e}", path.display()))))?;
        let to_io = |e: csv::Error| Error::Io(std::io::Error::other(e.to_string()));
        w.write_record(&self.header).map_err(to_io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|&x| Self::cell(x))).map_err(to_io)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// The full output of one command.
#[derive(Debug)]
pub struct Outcome {
    pub result: Value,
    pub exit: Exit,
    pub series: Option<Series>,
    /// Extra file the report is copied to.
    pub report_path: Option<PathBuf>,
}

impl Outcome {
    pub fn new<T: Serialize>(result: &T, exit: Exit) -> Result<Self> {
        let result = serde_json::to_value(result)
            .map_err(|e| Error::Parse(format!("cannot serialize report: {e}")))?;
        Ok(Self { result, exit, series: None, report_path: None })
    }

    pub fn with_series(mut self, series: Series) -> Self {
        self.series = Some(series);
        self
    }
}

/// What is printed on standard output.
#[derive(Debug, Serialize)]
pub struct Envelope<'a> {
    pub manifest: &'a RunManifest,
    pub log_base: &'a str,
    pub tol: f64,
    pub result: &'a Value,
}

pub fn render(env: &Envelope<'_>) -> Result<String> {
    to_report_json(env)
}
