use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::CheckResult;
use crate::engine::EngineKind;

/// How one (entry, prime, engine) job ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass(CheckResult),
    Fail(CheckResult),
    /// The prime is below the entry's floor.
    Skipped,
    /// Evaluation or reduction failed; the message carries the diagnostics.
    Error(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub entry_id: String,
    pub prime: u64,
    pub exponent: u32,
    pub engine: EngineKind,
    pub outcome: Outcome,
}

impl Record {
    /// Flat row for CSV and JSON output.
    pub fn row(&self) -> CheckResult {
        match &self.outcome {
            Outcome::Pass(r) | Outcome::Fail(r) => r.clone(),
            Outcome::Skipped | Outcome::Error(_) => {
                let (tag, pass) = match self.outcome {
                    Outcome::Skipped => ("skip", true),
                    _ => ("error", false),
                };
                CheckResult {
                    entry_id: self.entry_id.clone(),
                    prime: self.prime,
                    exponent: self.exponent,
                    lhs: tag.to_string(),
                    rhs: tag.to_string(),
                    pass,
                    engine: self.engine,
                    elapsed_us: 0,
                }
            }
        }
    }

    fn signature(&self) -> (String, String, &'static str) {
        match &self.outcome {
            Outcome::Pass(r) => (r.lhs.clone(), r.rhs.clone(), "pass"),
            Outcome::Fail(r) => (r.lhs.clone(), r.rhs.clone(), "fail"),
            Outcome::Skipped => (String::new(), String::new(), "skip"),
            Outcome::Error(_) => (String::new(), String::new(), "error"),
        }
    }

    fn status(&self) -> &'static str {
        self.signature().2
    }
}

/// An (entry, prime) where the exact and fast engines disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub entry_id: String,
    pub prime: u64,
    pub exact: String,
    pub fast: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub errors: usize,
    pub mismatches: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<Record>,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Serialize)]
struct ErrorRow<'a> {
    entry_id: &'a str,
    prime: u64,
    engine: EngineKind,
    message: &'a str,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    results: Vec<CheckResult>,
    errors: Vec<ErrorRow<'a>>,
    mismatches: &'a [Mismatch],
    summary: Summary,
}

fn describe(r: &Record) -> String {
    match &r.outcome {
        Outcome::Pass(c) | Outcome::Fail(c) => format!("{} lhs={} rhs={}", r.status(), c.lhs, c.rhs),
        Outcome::Skipped => "skip".to_string(),
        Outcome::Error(msg) => format!("error: {msg}"),
    }
}

impl Report {
    /// Sorts records by `(entry_id, prime, engine)` and pairs up engines.
    pub fn new(mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| (&a.entry_id, a.prime, a.engine).cmp(&(&b.entry_id, b.prime, b.engine)));
        let mut by_key: BTreeMap<(&str, u64), Vec<&Record>> = BTreeMap::new();
        for r in &records {
            by_key.entry((r.entry_id.as_str(), r.prime)).or_default().push(r);
        }
        let mismatches = by_key
            .values()
            .filter_map(|group| {
                let exact = group.iter().find(|r| r.engine == EngineKind::Exact)?;
                let fast = group.iter().find(|r| r.engine == EngineKind::Fast)?;
                (exact.signature() != fast.signature()).then(|| Mismatch {
                    entry_id: exact.entry_id.clone(),
                    prime: exact.prime,
                    exact: describe(exact),
                    fast: describe(fast),
                })
            })
            .collect();
        Report { records, mismatches }
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary {
            mismatches: self.mismatches.len(),
            ..Summary::default()
        };
        for r in &self.records {
            match r.outcome {
                Outcome::Pass(_) => s.passed += 1,
                Outcome::Fail(_) => s.failed += 1,
                Outcome::Skipped => s.skipped += 1,
                Outcome::Error(_) => s.errors += 1,
            }
        }
        s.checks = s.passed + s.failed + s.errors;
        s
    }

    /// No failures, no errors and no engine disagreements.
    pub fn success(&self) -> bool {
        let s = self.summary();
        s.failed == 0 && s.errors == 0 && s.mismatches == 0
    }

    fn rows(&self, include_skips: bool) -> Vec<CheckResult> {
        self.records
            .iter()
            .filter(|r| include_skips || r.outcome != Outcome::Skipped)
            .map(Record::row)
            .collect()
    }

    pub fn render(&self, format: ReportFormat, include_skips: bool) -> String {
        match format {
            ReportFormat::Text => self.render_text(),
            ReportFormat::Json => self.render_json(include_skips),
            ReportFormat::Csv => self.render_csv(include_skips),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let mut line = format!(
                "{:<16} p={:<4} mod p^{}  {:<5}  {}",
                r.entry_id,
                r.prime,
                r.exponent,
                r.engine.as_str(),
                describe(r)
            );
            if let Outcome::Pass(c) | Outcome::Fail(c) = &r.outcome {
                if c.elapsed_us > 0 {
                    let _ = write!(line, "  ({} us)", c.elapsed_us);
                }
            }
            out.push_str(&line);
            out.push('\n');
        }
        if !self.mismatches.is_empty() {
            out.push_str("\nengine mismatches:\n");
            for m in &self.mismatches {
                let _ = writeln!(out, "{} p={}: exact {} / fast {}", m.entry_id, m.prime, m.exact, m.fast);
            }
        }
        let s = self.summary();
        let _ = writeln!(
            out,
            "\n{} checks: {} passed, {} failed, {} errors, {} skipped, {} mismatches",
            s.checks, s.passed, s.failed, s.errors, s.skipped, s.mismatches
        );
        out
    }

    fn render_json(&self, include_skips: bool) -> String {
        let errors = self
            .records
            .iter()
            .filter_map(|r| match &r.outcome {
                Outcome::Error(message) => Some(ErrorRow {
                    entry_id: &r.entry_id,
                    prime: r.prime,
                    engine: r.engine,
                    message,
                }),
                _ => None,
            })
            .collect();
        let doc = JsonReport {
            results: self.rows(include_skips),
            errors,
            mismatches: &self.mismatches,
            summary: self.summary(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }

    fn render_csv(&self, include_skips: bool) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in self.rows(include_skips) {
            w.serialize(row).expect("row serializes");
        }
        let bytes = w.into_inner().expect("in-memory writer");
        let text = String::from_utf8(bytes).expect("utf-8 rows");
        if text.is_empty() {
            "entry_id,prime,exponent,lhs,rhs,pass,engine,elapsed_us\n".to_string()
        } else {
            text
        }
    }
}
