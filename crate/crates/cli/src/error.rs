use std::path::PathBuf;

use krull_dumas::criteria::CriterionError;
use krull_dumas::domains::{DomainError, ParseError};
use krull_dumas::oracle::HarnessError;
use krull_dumas::valuations::ValuationError;
use thiserror::Error;

/// Exit status for usage, configuration and parse errors.
pub const EXIT_USAGE: u8 = 2;
/// Exit status when some batch lines or harness trials failed.
pub const EXIT_PARTIAL: u8 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{message}\n{}", caret(.input, .error))]
    Parse { input: String, error: ParseError, message: String },
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error(transparent)]
    Criterion(#[from] CriterionError),
    #[error(transparent)]
    Harness(#[from] HarnessError),
    #[error("cannot read {}: {source}", .path.display())]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
    #[error("cannot serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

/// The input line with a caret under the offending column.
fn caret(input: &str, error: &ParseError) -> String {
    let pad = " ".repeat(error.column.saturating_sub(1));
    format!("  {input}\n  {pad}^")
}

impl CliError {
    /// Wraps a domain error, keeping the input for position annotation.
    pub fn from_domain(input: &str, error: DomainError) -> Self {
        match error {
            DomainError::Parse(e) => CliError::Parse { input: input.to_string(), message: e.to_string(), error: e },
            other => CliError::Domain(other),
        }
    }
}
