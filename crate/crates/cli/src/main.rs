//! `krull-dumas`: valuation-based irreducibility certificates from the command line.

mod batch;
mod error;
mod svg;
mod text;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use krull_dumas::criteria::{analyze_any, AnalysisOptions, AnalysisReport, NewtonPolygon, SCHEMA_VERSION};
use krull_dumas::domains::{parse_poly, DomainTag};
use krull_dumas::oracle::{soundness_harness, HarnessConfig, HarnessSummary, SoundnessTrial};
use krull_dumas::valuations::ValuationSpec;
use krull_dumas::values::Value;
use serde::Serialize;

use error::{CliError, EXIT_PARTIAL, EXIT_USAGE};

/// Environment variable that overrides `--seed`.
const SEED_ENV: &str = "KRULL_DUMAS_SEED";

#[derive(Debug, Parser)]
#[command(name = "krull-dumas", version, about = "Irreducibility certificates for polynomials over valued fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run both criteria on one polynomial and report the verdict.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Divide out the largest power of z before analysis.
        #[arg(long)]
        strip_z0: bool,
        /// List every qualifying index pair in text output.
        #[arg(long)]
        all_pairs: bool,
    },
    /// Compute the Newton polygon of one polynomial.
    Polygon {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(long)]
        strip_z0: bool,
    },
    /// Check the criteria against randomly constructed products.
    Harness(HarnessArgs),
    /// Analyze a file with a `domain=<tag> valuation=<spec>` header and one polynomial per line.
    Batch {
        file: PathBuf,
        #[arg(long)]
        strip_z0: bool,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Coefficient domain: Q, Q(x), F(x,y):Q or F(x,y):p=<prime>. Defaults to the valuation's domain.
    #[arg(long)]
    domain: Option<String>,
    /// Valuation: p-adic:<p>, qx-rank2:<p> or monomial-lex.
    #[arg(long)]
    valuation: String,
    #[command(flatten)]
    source: Source,
}

/// Exactly one of an inline expression or a file.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Polynomial in z, e.g. "z^2 + 2*z + 2".
    expr: Option<String>,
    /// Read the polynomial from a file instead.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct HarnessArgs {
    /// Key-value config file (trials, max_factor_degree, coefficient_height, valuation, domain, seed).
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    valuation: Option<String>,
    #[arg(long)]
    domain: Option<String>,
    #[arg(long)]
    trials: Option<usize>,
    /// Degree caps for the two factors, e.g. "4,4".
    #[arg(long)]
    max_degree: Option<String>,
    #[arg(long)]
    height: Option<u64>,
    /// Generator seed; KRULL_DUMAS_SEED takes precedence.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.clone(), source })
}

fn resolve(input: &InputArgs) -> Result<(String, DomainTag, ValuationSpec), CliError> {
    let spec: ValuationSpec = input.valuation.parse()?;
    let domain = match &input.domain {
        Some(d) => d.parse()?,
        None => spec.default_domain(),
    };
    spec.check_domain(domain)?;
    let text = match (&input.source.expr, &input.source.file) {
        (Some(e), _) => e.clone(),
        (None, Some(path)) => read(path)?.lines().map(str::trim).collect::<Vec<_>>().join(" ").trim().to_string(),
        (None, None) => return Err(CliError::Usage("no polynomial given".into())),
    };
    Ok((text, domain, spec))
}

fn run_analysis(input: &InputArgs, strip_z0: bool) -> Result<AnalysisReport, CliError> {
    let (text, domain, spec) = resolve(input)?;
    let f = parse_poly(&text, domain).map_err(|e| CliError::from_domain(&text, e))?;
    Ok(analyze_any(&f, spec, AnalysisOptions { strip_z0 })?)
}

fn finite_points(values: &[Value]) -> Vec<(usize, Value)> {
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_infinite())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

fn svg_of(r: &AnalysisReport) -> String {
    let title = format!("Newton polygon of {} under {}", r.polynomial, r.valuation);
    svg::render(&r.newton_polygon, &finite_points(&r.coefficient_values), &title)
}

#[derive(Serialize)]
struct PolygonRecord<'a> {
    schema_version: u32,
    polynomial: &'a str,
    valuation: &'a str,
    stripped_z_power: usize,
    newton_polygon: &'a NewtonPolygon,
}

#[derive(Serialize)]
struct HarnessRecord<'a> {
    schema_version: u32,
    seed: u64,
    summary: HarnessSummary,
    failures: Vec<&'a SoundnessTrial>,
}

fn harness_config(args: &HarnessArgs) -> Result<HarnessConfig, CliError> {
    let mut config = match (&args.config, &args.valuation) {
        (Some(path), _) => read(path)?.parse::<HarnessConfig>()?,
        (None, Some(v)) => HarnessConfig::new(v.parse()?),
        (None, None) => return Err(CliError::Usage("harness needs --config or --valuation".into())),
    };
    if let Some(v) = &args.valuation {
        config.valuation = v.parse()?;
        if args.domain.is_none() {
            config.domain = config.valuation.default_domain();
        }
    }
    if let Some(d) = &args.domain {
        config.domain = d.parse()?;
    }
    config.valuation.check_domain(config.domain)?;
    if let Some(t) = args.trials {
        config.trials = t;
    }
    if let Some(h) = args.height {
        if h == 0 {
            return Err(CliError::Usage("--height must be positive".into()));
        }
        config.coefficient_height = h;
    }
    if let Some(m) = &args.max_degree {
        let parts: Vec<Option<usize>> = m.split(',').map(|s| s.trim().parse().ok().filter(|&d| d >= 1)).collect();
        config.max_factor_degree = match parts.as_slice() {
            [Some(a), Some(b)] => (*a, *b),
            [Some(a)] => (*a, *a),
            _ => return Err(CliError::Usage(format!("--max-degree expects \"a,b\" with positive integers, got {m:?}"))),
        };
    }
    if let Some(s) = args.seed {
        config.seed = s;
    }
    if let Ok(s) = std::env::var(SEED_ENV) {
        config.seed = s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{SEED_ENV} must be an unsigned integer, got {s:?}")))?;
    }
    Ok(config)
}

/// Runs one command, writing reports to `out`; returns the exit status.
fn run(cli: Cli, out: &mut impl Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Analyze { input, format, strip_z0, all_pairs } => {
            let r = run_analysis(&input, strip_z0)?;
            match format {
                Format::Text => write!(out, "{}", text::report(&r, all_pairs))?,
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?,
                Format::Svg => write!(out, "{}", svg_of(&r))?,
            }
        }
        Command::Polygon { input, format, strip_z0 } => {
            let r = run_analysis(&input, strip_z0)?;
            match format {
                Format::Text => write!(out, "{}", text::polygon(&r.newton_polygon))?,
                Format::Json => {
                    let record = PolygonRecord {
                        schema_version: SCHEMA_VERSION,
                        polynomial: &r.polynomial,
                        valuation: &r.valuation,
                        stripped_z_power: r.stripped_z_power,
                        newton_polygon: &r.newton_polygon,
                    };
                    writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?
                }
                Format::Svg => write!(out, "{}", svg_of(&r))?,
            }
        }
        Command::Harness(args) => {
            if args.format == Format::Svg {
                return Err(CliError::Usage("harness output is text or json".into()));
            }
            let config = harness_config(&args)?;
            let trials = soundness_harness(&config)?;
            let summary = HarnessSummary::of(&trials);
            let failures: Vec<&SoundnessTrial> = trials.iter().filter(|t| !t.passed()).collect();
            if args.format == Format::Json {
                let record = HarnessRecord { schema_version: SCHEMA_VERSION, seed: config.seed, summary, failures };
                writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?;
            } else {
                write!(out, "{}", text::harness(&summary, config.seed))?;
                for t in &failures {
                    writeln!(out, "failure: {}", serde_json::to_string(t)?)?;
                }
            }
            if summary.failures > 0 {
                return Ok(EXIT_PARTIAL);
            }
        }
        Command::Batch { file, strip_z0 } => {
            let records = batch::run(&read(&file)?, AnalysisOptions { strip_z0 })?;
            for r in &records {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
            if records.iter().any(batch::Record::is_error) {
                return Ok(EXIT_PARTIAL);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
