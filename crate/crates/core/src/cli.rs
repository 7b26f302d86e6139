//! Command-line front end: `list`, `verify`, `wz`, `identities`.
//!
//! Exit codes: 0 when everything passes, 1 on a verification failure,
//! 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{self, EngineChoice, ReportFormat, SweepConfig};
use crate::{identities, wz};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "supercong", version, about = "Exact verification of supercongruences, WZ certificates and binomial identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every catalog entry.
    List {
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Check catalog entries over a range of primes.
    Verify(VerifyArgs),
    /// Check the WZ pair, its closed forms and its telescoped sums.
    Wz {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        nmax: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        kmax: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        pmax: i64,
    },
    /// Check the two binomial-sum identities and their recurrences.
    Identities {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        nmax: i64,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Inclusive prime range `A..B` (or a single number).
    #[arg(long, value_parser = parse_range)]
    pub primes: RangeInclusive<u64>,
    /// Comma-separated entry ids, or `all`.
    #[arg(long, default_value = "all")]
    pub ids: String,
    #[arg(long, value_enum, default_value_t = EngineArg::Exact)]
    pub engine: EngineArg,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Keep below-floor rows in CSV and JSON output.
    #[arg(long)]
    pub include_skips: bool,
    /// Report every elapsed time as zero.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ListFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EngineArg {
    Exact,
    Fast,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
    Csv,
}

/// Parses `A..B`, `A..=B` or `N`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let bad = || format!("malformed prime range `{s}` (expected A..B)");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty prime range `{s}`"));
    }
    Ok(lo..=hi)
}

#[derive(Serialize)]
struct EntryMeta {
    id: &'static str,
    description: &'static str,
    min_prime: u64,
    exponent: u32,
    family: Option<&'static str>,
    anchor: &'static str,
}

fn cmd_list(format: ListFormat, out: &mut dyn Write) -> std::io::Result<i32> {
    let metas: Vec<EntryMeta> = catalog::registry()
        .iter()
        .map(|e| EntryMeta {
            id: e.id,
            description: e.description,
            min_prime: e.min_prime,
            exponent: e.exponent,
            family: e.family.map(|f| f.label),
            anchor: e.anchor,
        })
        .collect();
    match format {
        ListFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&metas).expect("metadata serializes"))?,
        ListFormat::Text => {
            for m in &metas {
                writeln!(
                    out,
                    "{:<16} mod p^{}  min_prime {:<3} {:<22} {}",
                    m.id,
                    m.exponent,
                    m.min_prime,
                    m.family.unwrap_or("single"),
                    m.description
                )?;
                writeln!(out, "{:<16} {}", "", m.anchor)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let ids = if args.ids.trim() == "all" {
        None
    } else {
        let ids: Vec<String> = args.ids.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
        if let Some(unknown) = ids.iter().find(|id| catalog::lookup(id).is_err()) {
            writeln!(err, "error: unknown entry id `{unknown}`")?;
            return Ok(EXIT_USAGE);
        }
        Some(ids)
    };
    let config = SweepConfig {
        ids,
        primes: args.primes.clone(),
        engine: match args.engine {
            EngineArg::Exact => EngineChoice::Exact,
            EngineArg::Fast => EngineChoice::Fast,
            EngineArg::Both => EngineChoice::Both,
        },
        jobs: args.jobs as usize,
        timing: !args.no_timing,
    };
    let report = match catalog::sweep(&config) {
        Ok(report) => report,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let format = match args.format {
        FormatArg::Text => ReportFormat::Text,
        FormatArg::Json => ReportFormat::Json,
        FormatArg::Csv => ReportFormat::Csv,
    };
    let rendered = report.render(format, args.include_skips);
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                writeln!(err, "error: cannot write {}: {e}", path.display())?;
                return Ok(EXIT_USAGE);
            }
        }
        None => out.write_all(rendered.as_bytes())?,
    }
    if !matches!(format, ReportFormat::Text) || args.out.is_some() {
        let s = report.summary();
        writeln!(
            err,
            "{} checks: {} passed, {} failed, {} errors, {} skipped, {} mismatches",
            s.checks, s.passed, s.failed, s.errors, s.skipped, s.mismatches
        )?;
    }
    Ok(if report.success() { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_wz(nmax: i64, kmax: i64, pmax: i64, out: &mut dyn Write) -> std::io::Result<i32> {
    let s = wz::run_checks(nmax, kmax, pmax);
    writeln!(out, "WZ equation: {} points (1 <= n <= {nmax}, 0 <= k <= {kmax})", s.equation_points)?;
    writeln!(out, "closed forms: {} checks", s.closed_form_checks)?;
    writeln!(out, "telescopes: {} checks (primes <= {pmax})", s.telescope_checks)?;
    for f in &s.failures {
        writeln!(out, "FAIL {f}")?;
    }
    writeln!(out, "{}", if s.passed() { "all passed" } else { "failures found" })?;
    Ok(if s.passed() { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_identities(nmax: i64, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let s = match identities::run_checks(nmax) {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    writeln!(out, "identities: {} checks for 1 <= n <= {nmax}", s.checks)?;
    for f in &s.failures {
        writeln!(out, "FAIL {f}")?;
    }
    writeln!(out, "{}", if s.passed() { "all passed" } else { "failures found" })?;
    Ok(if s.passed() { EXIT_OK } else { EXIT_FAILURE })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::List { format } => cmd_list(format, out),
        Command::Verify(args) => cmd_verify(args, out, err),
        Command::Wz { nmax, kmax, pmax } => cmd_wz(nmax, kmax, pmax, out),
        Command::Identities { nmax } => cmd_identities(nmax, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_FAILURE
    })
}

/// Runs against the process's arguments and standard streams.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["supercong"];
        full.extend_from_slice(args);
        let code = run_with(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..7"), Ok(3..=7));
        assert_eq!(parse_range("3..=7"), Ok(3..=7));
        assert_eq!(parse_range("5"), Ok(5..=5));
        assert!(parse_range("7..3").is_err());
        assert!(parse_range("a..3").unwrap_err().contains("a..3"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["verify", "--primes", "4..4", "--ids", "C-03"]).0, EXIT_USAGE);
        let (code, _, err) = run_args(&["verify", "--primes", "5..5", "--ids", "C-03,Z-9"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("Z-9"));
        let (code, _, err) = run_args(&["verify", "--primes", "x..5"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("x..5"));
        assert_eq!(run_args(&["wz", "--nmax", "0", "--kmax", "1", "--pmax", "5"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["identities", "--nmax", "0"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn list_and_small_runs() {
        let (code, out, _) = run_args(&["list"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.lines().any(|l| l.starts_with("C-03") && l.contains("mod p^4") && l.contains("min_prime 3")));
        let (code, out, _) = run_args(&["list", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v.as_array().unwrap().len(), catalog::registry().len());
        assert_eq!(run_args(&["wz", "--nmax", "1", "--kmax", "1", "--pmax", "5"]).0, EXIT_OK);
        assert_eq!(run_args(&["identities", "--nmax", "1"]).0, EXIT_OK);
        let (code, out, _) = run_args(&["verify", "--primes", "5..5", "--ids", "C-03", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["results"][0]["lhs"], "430");
        assert_eq!(v["results"][0]["rhs"], "430");
    }
}
