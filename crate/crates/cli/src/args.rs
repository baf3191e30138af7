use std::fmt;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use intersection_algebra::{normalize_fan_order, Error, ExponentPair};
use num_rational::Rational64;
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Fan,
    HilbertBasis,
    Generators,
    Fund,
    Cf,
    HilbertSeries,
    Canonical,
    Gorenstein,
    Count,
    Bound,
    Dimension,
    FanlinearCheck,
    Normality,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

pub const DEFAULT_DEGREE_CAP: u64 = 10;
pub const DEFAULT_RS_BOUND: u64 = 25;
pub const DEFAULT_MULTIPLIER: u64 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub degree_cap: u64,
    pub rs_bound: u64,
    /// Bound on the `x` exponents; derived from the box when absent.
    pub m_bound: Option<u64>,
    pub multiplier_bound: u64,
    /// Per-cone coefficient pairs of one fan-linear function.
    pub fan_linear: Option<Vec<(Rational64, Rational64)>>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            degree_cap: DEFAULT_DEGREE_CAP,
            rs_bound: DEFAULT_RS_BOUND,
            m_bound: None,
            multiplier_bound: DEFAULT_MULTIPLIER,
            fan_linear: None,
        }
    }
}

/// A validated job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub pair: ExponentPair,
    pub format: Format,
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError {
    pub message: String,
    /// `--help` or `--version` was requested; the message is the output.
    pub informational: bool,
}

impl UsageError {
    fn new(message: impl Into<String>) -> Self {
        UsageError {
            message: format!("error: {}", message.into()),
            informational: false,
        }
    }
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for UsageError {}

/// Invariants of intersection algebras of monomial ideals.
///
/// Exit codes: 0 success, 2 usage error, 3 domain error, 4 a check or
/// verification failed.
#[derive(Debug, Parser)]
#[command(name = "isect-alg", version)]
struct Cli {
    /// What to compute. May come from the --input file instead.
    #[arg(value_enum)]
    command: Option<Command>,
    /// Exponents of the first ideal, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        conflicts_with = "input"
    )]
    a: Option<Vec<i64>>,
    /// Exponents of the second ideal, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        conflicts_with = "input"
    )]
    b: Option<Vec<i64>>,
    /// JSON job file.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Total-degree cap for Hilbert series.
    #[arg(long)]
    cap: Option<u64>,
    /// Box bound on r and s for oracle scans and box checks.
    #[arg(long = "box")]
    rs_bound: Option<u64>,
    /// Box bound on the x exponents.
    #[arg(long)]
    m_bound: Option<u64>,
    /// Largest multiplier tried by the normality check.
    #[arg(long)]
    multiplier: Option<u64>,
    /// Fan-linear function, one `c_r,c_s` pair per cone separated by `;`.
    /// Coefficients are integers or fractions `p/q`.
    #[arg(long)]
    fan_linear: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JobFile {
    command: Command,
    a: Vec<i64>,
    b: Vec<i64>,
    #[serde(default)]
    options: JobOptions,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct JobOptions {
    degree_cap: Option<u64>,
    rs_bound: Option<u64>,
    m_bound: Option<u64>,
    multiplier_bound: Option<u64>,
    fan_linear: Option<Vec<(Coefficient, Coefficient)>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Integer(i64),
    Text(String),
}

fn parse_rational(text: &str, flag: &str) -> Result<Rational64, UsageError> {
    let bad = || {
        UsageError::new(format!(
            "invalid value for {flag}: `{text}` is not an integer or p/q fraction"
        ))
    };
    let (p, q) = match text.trim().split_once('/') {
        Some((p, q)) => (
            p.trim().parse().map_err(|_| bad())?,
            q.trim().parse().map_err(|_| bad())?,
        ),
        None => (text.trim().parse().map_err(|_| bad())?, 1i64),
    };
    if q == 0 {
        return Err(UsageError::new(format!(
            "invalid value for {flag}: zero denominator in `{text}`"
        )));
    }
    Ok(Rational64::new(p, q))
}

fn parse_fan_linear_flag(text: &str) -> Result<Vec<(Rational64, Rational64)>, UsageError> {
    text.split(';')
        .map(|piece| {
            let parts: Vec<&str> = piece.split(',').collect();
            match parts.as_slice() {
                [r, s] => Ok((
                    parse_rational(r, "--fan-linear")?,
                    parse_rational(s, "--fan-linear")?,
                )),
                _ => Err(UsageError::new(format!(
                    "invalid value for --fan-linear: `{piece}` is not a `c_r,c_s` pair"
                ))),
            }
        })
        .collect()
}

fn coefficient(c: &Coefficient, flag: &str) -> Result<Rational64, UsageError> {
    match c {
        Coefficient::Integer(i) => Ok(Rational64::from_integer(*i)),
        Coefficient::Text(t) => parse_rational(t, flag),
    }
}

fn vector_error(err: &Error, source: &str) -> UsageError {
    let flag = match err {
        Error::NegativeEntry { vector, .. } | Error::EntryTooLarge { vector, .. } => {
            format!("{source}{vector}")
        }
        _ => format!("{source}a/{source}b"),
    };
    UsageError::new(format!("invalid value for {flag}: {err}"))
}

/// Parses a command line (including the program name) into a job.
pub fn parse_args<I, T>(argv: I) -> Result<JobSpec, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| {
        use clap::error::ErrorKind;
        UsageError {
            message: e.render().to_string(),
            informational: matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion),
        }
    })?;

    let mut options = Options::default();
    let (command, a, b, source) = match &cli.input {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                UsageError::new(format!(
                    "invalid value for --input: {}: {e}",
                    path.display()
                ))
            })?;
            let job: JobFile = serde_json::from_str(&text)
                .map_err(|e| UsageError::new(format!("invalid value for --input: {e}")))?;
            if cli.command.is_some_and(|c| c != job.command) {
                return Err(UsageError::new(
                    "the command argument disagrees with the --input file",
                ));
            }
            let o = job.options;
            options.degree_cap = o.degree_cap.unwrap_or(options.degree_cap);
            options.rs_bound = o.rs_bound.unwrap_or(options.rs_bound);
            options.m_bound = o.m_bound;
            options.multiplier_bound = o.multiplier_bound.unwrap_or(options.multiplier_bound);
            options.fan_linear = o
                .fan_linear
                .map(|pieces| {
                    pieces
                        .iter()
                        .map(|(r, s)| {
                            Ok((coefficient(r, "fan_linear")?, coefficient(s, "fan_linear")?))
                        })
                        .collect::<Result<Vec<_>, UsageError>>()
                })
                .transpose()?;
            (job.command, job.a, job.b, "input field ")
        }
        None => {
            let command = cli
                .command
                .ok_or_else(|| UsageError::new("missing the command argument"))?;
            let a = cli
                .a
                .clone()
                .ok_or_else(|| UsageError::new("missing required flag --a"))?;
            let b = cli
                .b
                .clone()
                .ok_or_else(|| UsageError::new("missing required flag --b"))?;
            (command, a, b, "--")
        }
    };

    // flags override values from the job file
    if let Some(cap) = cli.cap {
        options.degree_cap = cap;
    }
    if let Some(bound) = cli.rs_bound {
        options.rs_bound = bound;
    }
    if cli.m_bound.is_some() {
        options.m_bound = cli.m_bound;
    }
    if let Some(m) = cli.multiplier {
        options.multiplier_bound = m;
    }
    if let Some(text) = &cli.fan_linear {
        options.fan_linear = Some(parse_fan_linear_flag(text)?);
    }

    if options.rs_bound == 0 {
        return Err(UsageError::new(
            "invalid value for --box: must be at least 1",
        ));
    }
    if options.multiplier_bound < 2 && matches!(command, Command::Normality) {
        return Err(UsageError::new(
            "invalid value for --multiplier: must be at least 2",
        ));
    }

    let pair = normalize_fan_order(&a, &b).map_err(|e| vector_error(&e, source))?;
    if command == Command::Bound && pair.n() != 1 {
        return Err(UsageError::new(format!(
            "invalid value for {source}a: bound takes a single exponent"
        )));
    }
    if command == Command::FanlinearCheck && options.fan_linear.is_none() {
        return Err(UsageError::new("missing required flag --fan-linear"));
    }

    Ok(JobSpec {
        command,
        a: pair.restore().0,
        b: pair.restore().1,
        pair,
        format: cli.format,
        options,
    })
}
