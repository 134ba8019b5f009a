use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::{RunError, RunResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("exports serialize infallibly");
    s.push('\n');
    s
}

/// Writes to `out`, or stdout when `None`.
pub fn emit(text: &str, out: Option<&Path>) -> RunResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| RunError::Write { path: path.to_path_buf(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

/// Quotes a CSV field when needed.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_line(fields: &[String]) -> String {
    let mut line = fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}
