//! Command-line front end. Every printed value comes straight from a library
//! call; this module only parses flags and formats output.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::mixed_poly::{self, IdentityId};
use crate::sequences;
use crate::series_core::rational::{self, Rational};
use crate::series_core::TruncatedSeries;
use crate::verify::{self, GridSpec, SuiteReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_IDENTITY_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "polycauchy",
    version,
    about = "Exact mixed-type Cauchy/poly-Cauchy polynomials of the second kind"
)]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of Ã_n^{(r,k)}(x), or its value at --x.
    Compute(ComputeArgs),
    /// The numbers Ã_0, ..., Ã_{n_max} (or values at --x).
    Table(TableArgs),
    /// Coefficients of a named generating series.
    Series(SeriesArgs),
    /// Run identity checks over a parameter grid.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    /// Evaluation point, "p" or "p/q".
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub x: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub n_max: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub x: Option<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    #[value(name = "cauchy2_prefactor")]
    Cauchy2Prefactor,
    #[value(name = "lif")]
    Lif,
    #[value(name = "lif_of_neglog")]
    LifOfNeglog,
    #[value(name = "log1p")]
    Log1p,
    #[value(name = "mixed_gf")]
    MixedGf,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(value_enum)]
    pub name: SeriesName,
    #[arg(long)]
    pub order: usize,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub r: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub k: i64,
    /// For mixed_gf: the value of x (default 0).
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub x: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub r: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub k: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',')]
    pub s: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',', value_parser = parse_rational, allow_hyphen_values = true)]
    pub lambda: Option<Vec<Rational>>,
    #[arg(long, value_delimiter = ',', value_parser = parse_rational, allow_hyphen_values = true)]
    pub y: Option<Vec<Rational>>,
    /// Comma-separated identity keys; all identities when absent.
    #[arg(long, value_delimiter = ',')]
    pub identities: Option<Vec<String>>,
}

impl VerifyArgs {
    pub fn grid(&self) -> GridSpec {
        let d = GridSpec::default();
        GridSpec {
            n_max: self.n_max.unwrap_or(d.n_max),
            r_set: self.r.clone().unwrap_or(d.r_set),
            k_set: self.k.clone().unwrap_or(d.k_set),
            s_set: self.s.clone().unwrap_or(d.s_set),
            lambda_set: self.lambda.clone().unwrap_or(d.lambda_set),
            y_samples: self.y.clone().unwrap_or(d.y_samples),
        }
    }

    pub fn selection(&self) -> Result<Vec<IdentityId>, Error> {
        match &self.identities {
            None => Ok(IdentityId::ALL.to_vec()),
            Some(keys) => keys.iter().map(|k| k.parse()).collect(),
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::Config(_) | Error::ParseRational(_)) => EXIT_USAGE,
            CliError::Lib(_) => EXIT_DOMAIN,
            CliError::Io(_) => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

/// Parses `args`, runs the command and returns the process exit code.
/// Messages go to `stderr`; output goes to `stdout` unless `--out` is set.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(stdout, "{}", e.render())
            } else {
                write!(stderr, "{}", e.render())
            };
            return code as u8;
        }
    };
    let result = match &cli.out {
        Some(path) => File::create(path).map_err(CliError::from).and_then(|f| {
            let mut w = BufWriter::new(f);
            let code = execute(&cli, &mut w)?;
            w.flush()?;
            Ok(code)
        }),
        None => execute(&cli, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match &cli.command {
        Command::Compute(a) => cmd_compute(a, cli.format, out).map(|_| EXIT_OK),
        Command::Table(a) => cmd_table(a, cli.format, out).map(|_| EXIT_OK),
        Command::Series(a) => cmd_series(a, cli.format, out).map(|_| EXIT_OK),
        Command::Verify(a) => cmd_verify(a, cli.format, out),
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational::to_canonical).collect()
}

#[derive(Serialize)]
struct ComputeJson<'a> {
    n: usize,
    r: usize,
    k: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coeffs: Option<&'a [String]>,
}

pub fn cmd_compute(a: &ComputeArgs, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let poly = mixed_poly::mixed_oracle(a.n, a.r, a.k);
    match &a.x {
        Some(x0) => {
            let value = rational::to_canonical(&poly.eval(x0));
            match format {
                Format::Plain => writeln!(out, "{value}")?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["n", "r", "k", "x", "value"])?;
                    w.write_record([
                        a.n.to_string(),
                        a.r.to_string(),
                        a.k.to_string(),
                        rational::to_canonical(x0),
                        value,
                    ])?;
                    w.flush()?;
                }
                Format::Json => {
                    let j = ComputeJson {
                        n: a.n,
                        r: a.r,
                        k: a.k,
                        x: Some(rational::to_canonical(x0)),
                        value: Some(value),
                        coeffs: None,
                    };
                    writeln!(out, "{}", serde_json::to_string(&j).expect("serializable"))?;
                }
            }
        }
        None => {
            let coeffs = strings(poly.coeffs());
            match format {
                Format::Plain => writeln!(out, "{}", coeffs.join(" "))?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["power", "coeff"])?;
                    for (j, c) in coeffs.iter().enumerate() {
                        w.write_record([j.to_string(), c.clone()])?;
                    }
                    w.flush()?;
                }
                Format::Json => {
                    let j = ComputeJson {
                        n: a.n,
                        r: a.r,
                        k: a.k,
                        x: None,
                        value: None,
                        coeffs: Some(&coeffs),
                    };
                    writeln!(out, "{}", serde_json::to_string(&j).expect("serializable"))?;
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Row {
    n: usize,
    value: String,
}

pub fn cmd_table(a: &TableArgs, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let values = match &a.x {
        Some(x0) => mixed_poly::mixed_values(a.n_max, a.r, a.k, x0),
        None => mixed_poly::mixed_numbers(a.n_max, a.r, a.k),
    };
    let rows: Vec<Row> = values
        .iter()
        .enumerate()
        .map(|(n, v)| Row {
            n,
            value: rational::to_canonical(v),
        })
        .collect();
    match format {
        Format::Plain => {
            for row in &rows {
                writeln!(out, "{} {}", row.n, row.value)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for row in &rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&rows).expect("serializable")
        )?,
    }
    Ok(())
}

/// The plain coefficients of the named series.
pub fn named_series(a: &SeriesArgs) -> TruncatedSeries {
    match a.name {
        SeriesName::Cauchy2Prefactor => sequences::cauchy2_prefactor(a.r, a.order),
        SeriesName::Lif => sequences::lif_series(a.k, a.order),
        SeriesName::LifOfNeglog => sequences::lif_of_neglog(a.k, a.order),
        SeriesName::Log1p => TruncatedSeries::log1p(a.order),
        SeriesName::MixedGf => {
            let x0 = a.x.clone().unwrap_or_else(rational::zero);
            let r = a.r.max(0) as usize;
            mixed_poly::mixed_generating_series(r, a.k, a.order).eval_x(&x0)
        }
    }
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    series: &'a str,
    order: usize,
    coeffs: Vec<String>,
    egf: Vec<String>,
}

pub fn cmd_series(a: &SeriesArgs, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    if a.name == SeriesName::MixedGf && a.r < 0 {
        return Err(Error::ParamDomain(format!("mixed_gf needs r >= 0, got {}", a.r)).into());
    }
    let series = named_series(a);
    let coeffs = strings(series.coeffs());
    let egf = strings(&series.egf_coeffs());
    match format {
        Format::Plain => {
            for (j, (c, e)) in coeffs.iter().zip(&egf).enumerate() {
                writeln!(out, "{j} {c} {e}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "coeff", "egf"])?;
            for (j, (c, e)) in coeffs.iter().zip(&egf).enumerate() {
                w.write_record([j.to_string(), c.clone(), e.clone()])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let name = a.name.to_possible_value().expect("no skipped variants");
            let j = SeriesJson {
                series: name.get_name(),
                order: a.order,
                coeffs,
                egf,
            };
            writeln!(out, "{}", serde_json::to_string(&j).expect("serializable"))?;
        }
    }
    Ok(())
}

pub fn cmd_verify(a: &VerifyArgs, format: Format, out: &mut dyn Write) -> Result<u8, CliError> {
    let report = verify::run_suite(&a.grid(), &a.selection()?)?;
    write_report(&report, format, out)?;
    Ok(if report.fail == 0 {
        EXIT_OK
    } else {
        EXIT_IDENTITY_FAILURE
    })
}

fn status(e: &verify::SuiteEntry) -> &'static str {
    if e.skipped {
        "skipped"
    } else if e.equal {
        "pass"
    } else {
        "fail"
    }
}

fn write_report(report: &SuiteReport, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Plain => {
            for e in &report.identities {
                writeln!(out, "{} {} {}", e.identity, e.params, status(e))?;
            }
            writeln!(
                out,
                "pass {} fail {} skipped {}",
                report.pass, report.fail, report.skipped
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["identity", "params", "status"])?;
            for e in &report.identities {
                w.write_record([e.identity.key(), &e.params.to_string(), status(e)])?;
            }
            w.flush()?;
        }
        Format::Json => writeln!(out, "{}", verify::report_to_json(report))?,
    }
    Ok(())
}
