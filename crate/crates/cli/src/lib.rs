//! The `kpell` command-line tool.
//!
//! Exit codes: `0` success, `1` a verification failure or OEIS mismatch,
//! `2` bad flags, `3` file or network errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use kpell_core::oeis::{cross_check, parse_bfile, OeisMapping, OeisOutcome};
use kpell_core::sweep::{run_sweep, RunOptions, SweepMode, SweepSpec, Target};
use kpell_core::{binet_pair, sequence_range, Family, Summary};

pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const IO: i32 = 3;
}

#[derive(Debug, Parser)]
#[command(name = "kpell", version, about = "Generate k-Pell numbers and verify their integral representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a range of P(k,n) or Q(k,n).
    Gen(GenArgs),
    /// Print the P and Q tables for k = 1..=k-max, n = 0..=n-max.
    Table(TableArgs),
    /// Sweep theorems and lemmas, one JSON report per line.
    Verify(VerifyArgs),
    /// Query the Binet pair (P(k,n), Q(k,n)) from the ring computation.
    Binet(BinetArgs),
    /// Cross-check an OEIS b-file against the generated sequence.
    Oeis(OeisArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Pell,
    PellLucas,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Pell => Family::KPell,
            FamilyArg::PellLucas => Family::KPellLucas,
        }
    }
}

fn k_parser() -> clap::builder::RangedU64ValueParser<u64> {
    clap::value_parser!(u64).range(1..u64::MAX)
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, value_parser = k_parser())]
    pub k: u64,
    #[arg(long, default_value_t = 0)]
    pub from: u64,
    #[arg(long)]
    pub to: u64,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long = "k-max", value_parser = k_parser(), default_value_t = 6)]
    pub k_max: u64,
    #[arg(long = "n-max", default_value_t = 10)]
    pub n_max: u64,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

/// An inclusive range written `a..b` or as a single value `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusiveRange(pub RangeInclusive<u64>);

impl std::str::FromStr for InclusiveRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad range bound {t:?} in {s:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(InclusiveRange(lo..=hi))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetSet(pub Vec<Target>);

impl std::str::FromStr for TargetSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Target::parse_set(s).map(TargetSet)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Numeric,
    Both,
}

impl From<ModeArg> for SweepMode {
    fn from(m: ModeArg) -> SweepMode {
        match m {
            ModeArg::Exact => SweepMode::Exact,
            ModeArg::Numeric => SweepMode::Numeric,
            ModeArg::Both => SweepMode::Both,
        }
    }
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got {s:?}")),
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated: p-ln, q-ln, p-lnr, q-lnr, p-even, p-odd, lemma21,
    /// lemma22, `theorems` or `all`.
    #[arg(long, default_value = "all")]
    pub theorem: TargetSet,
    #[arg(long, default_value = "1..10")]
    pub k: InclusiveRange,
    #[arg(long, default_value = "0..8")]
    pub l: InclusiveRange,
    #[arg(long, default_value = "0..8")]
    pub n: InclusiveRange,
    #[arg(long, default_value = "0..8")]
    pub r: InclusiveRange,
    /// Range of m for lemma22; defaults to the n range.
    #[arg(long)]
    pub m: Option<InclusiveRange>,
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: ModeArg,
    #[arg(long, value_parser = parse_tol, default_value = "1e-12")]
    pub tol: f64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct BinetArgs {
    #[arg(long, value_parser = k_parser())]
    pub k: u64,
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OeisArgs {
    /// A-number, e.g. A002605.
    #[arg(long)]
    pub id: String,
    /// Local b-file.
    #[arg(long, conflicts_with = "fetch", required_unless_present = "fetch")]
    pub file: Option<PathBuf>,
    /// Download the b-file from oeis.org.
    #[arg(long)]
    pub fetch: bool,
    /// Number of leading terms to compare.
    #[arg(long = "n", default_value_t = 30)]
    pub n_check: usize,
    /// Mapping override: sequence family.
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Mapping override: k.
    #[arg(long, value_parser = k_parser())]
    pub k: Option<u64>,
    /// Mapping override: OEIS index of the n = 0 term.
    #[arg(long, allow_negative_numbers = true)]
    pub offset: Option<i64>,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Io(_) => exit::IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) => m,
        }
    }
}

impl From<kpell_core::Error> for CliError {
    fn from(e: kpell_core::Error) -> Self {
        match e {
            kpell_core::Error::BFileSyntax { .. } => CliError::Io(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(&a, out),
        Command::Table(a) => cmd_table(&a, out),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Binet(a) => cmd_binet(&a, out),
        Command::Oeis(a) => cmd_oeis(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.code()
        }
    }
}

fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.from > a.to {
        return Err(CliError::Usage(format!("empty range: --from {} > --to {}", a.from, a.to)));
    }
    let values = sequence_range(a.family.into(), a.k, a.from, a.to)?;
    let indexed = (a.from..=a.to).zip(&values);
    match a.format {
        Format::Plain => {
            for (_, v) in indexed {
                writeln!(out, "{v}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,value")?;
            for (n, v) in indexed {
                writeln!(out, "{n},{v}")?;
            }
        }
        Format::Json => {
            let arr: Vec<_> = indexed.map(|(n, v)| json!({ "n": n, "value": v.to_string() })).collect();
            writeln!(out, "{}", serde_json::Value::Array(arr))?;
        }
    }
    Ok(exit::OK)
}

/// Renders both tables. The plain format is tab-separated with one titled
/// block per family.
pub fn render_table(k_max: u64, n_max: u64, format: Format) -> Result<String, kpell_core::Error> {
    let families = [(Family::KPell, "k-Pell numbers"), (Family::KPellLucas, "k-Pell-Lucas numbers")];
    let mut rows = Vec::new();
    for (family, _) in families {
        let mut block = Vec::new();
        for k in 1..=k_max {
            block.push((k, sequence_range(family, k, 0, n_max)?));
        }
        rows.push(block);
    }
    let mut s = String::new();
    match format {
        Format::Plain => {
            for (i, ((family, title), block)) in families.iter().zip(&rows).enumerate() {
                if i > 0 {
                    s.push('\n');
                }
                let sym = family.symbol();
                let _ = writeln!(s, "{title} {sym}(k,n)");
                let header: Vec<String> = (0..=n_max).map(|n| n.to_string()).collect();
                let _ = writeln!(s, "n\t{}", header.join("\t"));
                for (k, values) in block {
                    let cells: Vec<String> = values.iter().map(ToString::to_string).collect();
                    let _ = writeln!(s, "{sym}({k},n)\t{}", cells.join("\t"));
                }
            }
        }
        Format::Csv => {
            for ((family, _), block) in families.iter().zip(&rows) {
                let header: Vec<String> = (0..=n_max).map(|n| n.to_string()).collect();
                let _ = writeln!(s, "family,k,{}", header.join(","));
                for (k, values) in block {
                    let cells: Vec<String> = values.iter().map(ToString::to_string).collect();
                    let _ = writeln!(s, "{},{k},{}", family.symbol(), cells.join(","));
                }
            }
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            for ((family, _), block) in families.iter().zip(&rows) {
                let arr: Vec<_> = block
                    .iter()
                    .map(|(k, values)| {
                        json!({ "k": k, "values": values.iter().map(ToString::to_string).collect::<Vec<_>>() })
                    })
                    .collect();
                obj.insert(family.symbol().to_string(), serde_json::Value::Array(arr));
            }
            let _ = writeln!(s, "{}", serde_json::Value::Object(obj));
        }
    }
    Ok(s)
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    out.write_all(render_table(a.k_max, a.n_max, a.format)?.as_bytes())?;
    Ok(exit::OK)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let spec = SweepSpec {
        targets: a.theorem.0.clone(),
        k: a.k.0.clone(),
        l: a.l.0.clone(),
        m: a.m.as_ref().unwrap_or(&a.n).0.clone(),
        n: a.n.0.clone(),
        r: a.r.0.clone(),
    };
    let opts = RunOptions { mode: a.mode.into(), tol: a.tol, jobs: a.jobs };
    let reports = run_sweep(&spec, opts)?;
    for report in &reports {
        let line = serde_json::to_string(report).map_err(|e| CliError::Io(e.to_string()))?;
        writeln!(out, "{line}")?;
    }
    let summary = Summary::tally(&reports);
    writeln!(err, "summary: {summary}")?;
    Ok(if summary.fail == 0 { exit::OK } else { exit::FAILURE })
}

fn cmd_binet(a: &BinetArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let pair = binet_pair(a.k, a.n)?;
    match a.format {
        Format::Json => writeln!(
            out,
            "{}",
            json!({ "k": a.k, "n": a.n, "p": pair.p.to_string(), "q": pair.q.to_string() })
        )?,
        Format::Csv => {
            writeln!(out, "k,n,p,q")?;
            writeln!(out, "{},{},{},{}", a.k, a.n, pair.p, pair.q)?;
        }
        Format::Plain => writeln!(out, "P({k},{n}) = {}\nQ({k},{n}) = {}", pair.p, pair.q, k = a.k, n = a.n)?,
    }
    Ok(exit::OK)
}

fn resolve_mapping(a: &OeisArgs) -> Result<OeisMapping, CliError> {
    let mapping = match (OeisMapping::lookup(&a.id), a.family, a.k) {
        (Ok(m), _, _) => m,
        (Err(_), Some(family), Some(k)) => {
            OeisMapping::new(kpell_core::oeis::normalize_id(&a.id), family.into(), k, 0)
        }
        (Err(e), _, _) => {
            return Err(CliError::Usage(format!("{e}; pass --family and --k to supply a mapping")));
        }
    };
    Ok(OeisMapping {
        family: a.family.map(Family::from).unwrap_or(mapping.family),
        k: a.k.unwrap_or(mapping.k),
        offset: a.offset.unwrap_or(mapping.offset),
        ..mapping
    })
}

fn fetch(url: &str) -> Result<String, CliError> {
    let mut resp = ureq::get(url).call().map_err(|e| CliError::Io(format!("fetching {url}: {e}")))?;
    resp.body_mut()
        .read_to_string()
        .map_err(|e| CliError::Io(format!("reading {url}: {e}")))
}

fn cmd_oeis(a: &OeisArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let mapping = resolve_mapping(a)?;
    let text = match &a.file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))?,
        None => fetch(&mapping.bfile_url())?,
    };
    let entries = parse_bfile(&text)?;
    let outcome = cross_check(&mapping, &entries, a.n_check)?;
    match a.format {
        Format::Json => writeln!(out, "{}", json!({ "mapping": mapping, "outcome": outcome }))?,
        _ => writeln!(out, "{mapping}: {outcome}")?,
    }
    Ok(match outcome {
        OeisOutcome::Match { .. } => exit::OK,
        OeisOutcome::Mismatch { .. } => exit::FAILURE,
        OeisOutcome::Insufficient { .. } => exit::IO,
    })
}
