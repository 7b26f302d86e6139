//! Registry of congruences with exact and fast evaluators, plus the
//! check and sweep drivers.

mod entries;
mod report;

use std::ops::RangeInclusive;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::Rational;
use crate::engine::{Engine, EngineKind, ExactEngine, FastEngine};
use crate::error::{Error, Result};
use crate::numthy::{is_prime, odd_primes};

pub use entries::reversed_b_term;
pub use report::{Mismatch, Outcome, Record, Report, ReportFormat, Summary};

/// Evaluator for both sides of a congruence at index `k`.
pub type Eval<E> = fn(&E, i64) -> Result<(<E as Engine>::Value, <E as Engine>::Value)>;

/// Index range of a per-`k` family.
#[derive(Clone, Copy)]
pub struct Family {
    pub label: &'static str,
    pub range: fn(u64) -> RangeInclusive<i64>,
}

impl std::fmt::Debug for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label)
    }
}

/// One congruence `lhs == rhs (mod p^exponent)`.
#[derive(Clone, Copy)]
pub struct CongruenceEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub min_prime: u64,
    pub exponent: u32,
    pub family: Option<Family>,
    pub anchor: &'static str,
    exact: Eval<ExactEngine>,
    fast: Eval<FastEngine>,
}

impl std::fmt::Debug for CongruenceEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CongruenceEntry")
            .field("id", &self.id)
            .field("min_prime", &self.min_prime)
            .field("exponent", &self.exponent)
            .field("family", &self.family)
            .finish()
    }
}

impl CongruenceEntry {
    /// Indices checked at `p`: the family range, or `[0]` for a single congruence.
    pub fn indices(&self, p: u64) -> Vec<i64> {
        match self.family {
            Some(f) => (f.range)(p).collect(),
            None => vec![0],
        }
    }

    pub fn admits(&self, p: u64) -> bool {
        p >= self.min_prime && p % 2 == 1 && is_prime(p)
    }

    /// Exact rational values of both sides at `(p, k)`.
    pub fn exact_sides(&self, engine: &ExactEngine, k: i64) -> Result<(Rational, Rational)> {
        (self.exact)(engine, k)
    }

    /// Fast-engine values of both sides at `(p, k)`.
    pub fn fast_sides(&self, engine: &FastEngine, k: i64) -> Result<(crate::padic::PAdic, crate::padic::PAdic)> {
        (self.fast)(engine, k)
    }

    /// Residues of both sides modulo `p^e` under the given engine, for the
    /// first failing index or, if none fails, summed over all indices.
    pub fn residues(&self, p: u64, engine: EngineKind, e: u32) -> Result<(BigUint, BigUint)> {
        self.validate(p)?;
        match engine {
            EngineKind::Exact => residues_with(&ExactEngine::new(p)?, self.exact, &self.indices(p), e),
            EngineKind::Fast => residues_with(&FastEngine::new(p, e)?, self.fast, &self.indices(p), e),
        }
    }

    fn validate(&self, p: u64) -> Result<()> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if p < self.min_prime {
            return Err(Error::BelowFloor {
                id: self.id.to_string(),
                prime: p,
                floor: self.min_prime,
            });
        }
        Ok(())
    }
}

fn residues_with<E: Engine>(engine: &E, eval: Eval<E>, indices: &[i64], e: u32) -> Result<(BigUint, BigUint)> {
    let modulus = num_traits::pow(BigUint::from(engine.prime()), e as usize);
    let (mut lsum, mut rsum) = (BigUint::zero(), BigUint::zero());
    for &k in indices {
        let at = |err: Error| {
            if indices.len() > 1 || k != 0 {
                Error::AtIndex { k, source: Box::new(err) }
            } else {
                err
            }
        };
        let (lhs, rhs) = eval(engine, k).map_err(at)?;
        let l = engine.reduce(&lhs, e).map_err(at)?;
        let r = engine.reduce(&rhs, e).map_err(at)?;
        if l != r {
            return Ok((l, r));
        }
        lsum = (lsum + l) % &modulus;
        rsum = (rsum + r) % &modulus;
    }
    Ok((lsum, rsum))
}

/// Every registered congruence, in registry order.
pub fn registry() -> &'static [CongruenceEntry] {
    entries::ENTRIES
}

pub fn lookup(id: &str) -> Result<&'static CongruenceEntry> {
    registry()
        .iter()
        .find(|entry| entry.id == id)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// Outcome of one (entry, prime, engine) check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub entry_id: String,
    pub prime: u64,
    pub exponent: u32,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub engine: EngineKind,
    pub elapsed_us: u64,
}

/// Checks one entry at one prime.
pub fn check(entry_id: &str, p: u64, engine: EngineKind) -> Result<CheckResult> {
    let entry = lookup(entry_id)?;
    let start = Instant::now();
    let (l, r) = entry.residues(p, engine, entry.exponent)?;
    Ok(CheckResult {
        entry_id: entry.id.to_string(),
        prime: p,
        exponent: entry.exponent,
        pass: l == r,
        lhs: l.to_string(),
        rhs: r.to_string(),
        engine,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}

/// Engines requested for a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineChoice {
    Exact,
    Fast,
    Both,
}

impl EngineChoice {
    pub fn kinds(&self) -> &'static [EngineKind] {
        match self {
            EngineChoice::Exact => &[EngineKind::Exact],
            EngineChoice::Fast => &[EngineKind::Fast],
            EngineChoice::Both => &[EngineKind::Exact, EngineKind::Fast],
        }
    }
}

/// Parameters of a sweep.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// `None` selects every entry.
    pub ids: Option<Vec<String>>,
    pub primes: RangeInclusive<u64>,
    pub engine: EngineChoice,
    pub jobs: usize,
    /// Zero every `elapsed_us`, making reports reproducible byte for byte.
    pub timing: bool,
}

impl SweepConfig {
    pub fn new(primes: RangeInclusive<u64>) -> Self {
        SweepConfig {
            ids: None,
            primes,
            engine: EngineChoice::Exact,
            jobs: 1,
            timing: true,
        }
    }
}

fn select(ids: &Option<Vec<String>>) -> Result<Vec<&'static CongruenceEntry>> {
    match ids {
        None => Ok(registry().iter().collect()),
        Some(ids) => ids.iter().map(|id| lookup(id)).collect(),
    }
}

fn run_one(entry: &CongruenceEntry, p: u64, engine: EngineKind, timing: bool) -> Record {
    let outcome = if p < entry.min_prime {
        Outcome::Skipped
    } else {
        match check(entry.id, p, engine) {
            Ok(mut result) => {
                if !timing {
                    result.elapsed_us = 0;
                }
                if result.pass {
                    Outcome::Pass(result)
                } else {
                    Outcome::Fail(result)
                }
            }
            Err(err) => Outcome::Error(err.to_string()),
        }
    };
    Record {
        entry_id: entry.id.to_string(),
        prime: p,
        exponent: entry.exponent,
        engine,
        outcome,
    }
}

/// Runs every selected entry at every odd prime in range on a pool of
/// `jobs` workers. Rows come back sorted by `(entry_id, prime, engine)`.
pub fn sweep(config: &SweepConfig) -> Result<Report> {
    let entries = select(&config.ids)?;
    let primes = odd_primes(*config.primes.start(), *config.primes.end());
    if primes.is_empty() {
        return Err(Error::Domain(format!(
            "no odd primes in {}..{}",
            config.primes.start(),
            config.primes.end()
        )));
    }
    let work: Vec<(&CongruenceEntry, u64, EngineKind)> = entries
        .iter()
        .flat_map(|entry| {
            primes
                .iter()
                .flat_map(move |&p| config.engine.kinds().iter().map(move |&kind| (*entry, p, kind)))
        })
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|err| Error::Domain(format!("cannot start worker pool: {err}")))?;
    let records: Vec<Record> = pool.install(|| {
        work.par_iter()
            .map(|&(entry, p, kind)| run_one(entry, p, kind, config.timing))
            .collect()
    });
    Ok(Report::new(records))
}
