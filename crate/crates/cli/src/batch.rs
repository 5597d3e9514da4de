//! Batch mode: a header line `domain=<tag> valuation=<spec>`, then one
//! polynomial per line. Blank lines and lines starting with `#` are skipped.

use krull_dumas::criteria::{analyze_any, AnalysisOptions, AnalysisReport, SCHEMA_VERSION};
use krull_dumas::domains::{parse_poly, DomainError, DomainTag};
use krull_dumas::valuations::ValuationSpec;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Record {
    Ok {
        schema_version: u32,
        line: usize,
        report: Box<AnalysisReport>,
    },
    Error {
        schema_version: u32,
        line: usize,
        input: String,
        error: String,
        /// 1-based column for parse errors.
        #[serde(skip_serializing_if = "Option::is_none")]
        column: Option<usize>,
    },
}

impl Record {
    pub fn is_error(&self) -> bool {
        matches!(self, Record::Error { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Header {
    pub domain: DomainTag,
    pub valuation: ValuationSpec,
}

pub fn parse_header(line: &str) -> Result<Header, CliError> {
    let bad = || CliError::Usage(format!("batch header must read `domain=<tag> valuation=<spec>`, got {line:?}"));
    let rest = line.trim().strip_prefix("domain=").ok_or_else(bad)?;
    let (domain, valuation) = rest.rsplit_once("valuation=").ok_or_else(bad)?;
    let domain: DomainTag = domain.trim().parse()?;
    let valuation: ValuationSpec = valuation.trim().parse()?;
    valuation.check_domain(domain)?;
    Ok(Header { domain, valuation })
}

fn analyze_line(header: Header, opts: AnalysisOptions, line: usize, input: &str) -> Record {
    let error = |error: String, column: Option<usize>| Record::Error {
        schema_version: SCHEMA_VERSION,
        line,
        input: input.to_string(),
        error,
        column,
    };
    let f = match parse_poly(input, header.domain) {
        Ok(f) => f,
        Err(DomainError::Parse(e)) => return error(e.to_string(), Some(e.column)),
        Err(e) => return error(e.to_string(), None),
    };
    match analyze_any(&f, header.valuation, opts) {
        Ok(report) => Record::Ok { schema_version: SCHEMA_VERSION, line, report: Box::new(report) },
        Err(e) => error(e.to_string(), None),
    }
}

/// Records in input order; the header must precede every polynomial line.
pub fn run(text: &str, opts: AnalysisOptions) -> Result<Vec<Record>, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let Some((_, first)) = lines.next() else {
        return Ok(Vec::new());
    };
    let header = parse_header(first)?;
    let body: Vec<(usize, &str)> = lines.collect();
    Ok(body
        .par_iter()
        .map(|&(line, input)| analyze_line(header, opts, line, input))
        .collect())
}
