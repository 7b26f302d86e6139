//! Two finite binomial-sum identities and the order-two recurrences that
//! both of their sides satisfy.

use rayon::prelude::*;

use crate::arith::{binomial, rat, rat_pow, Rational};
use crate::error::{Error, Result};
use crate::numthy::harmonic;

fn binom(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k).expect("nonnegative top argument"))
}

fn positive(n: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::Domain(format!("expected n >= 1, got {n}")));
    }
    Ok(())
}

/// `sum_{k=1}^n C(n,k) / (1+2k)`.
pub fn h1_lhs(n: i64) -> Result<Rational> {
    positive(n)?;
    Ok((1..=n).map(|k| binom(n, k) / rat(1 + 2 * k)).sum())
}

/// `c (sum_{k=1}^n C(2k,k)/2^k) + c - 1` with `c = 4^n / ((1+2n) C(2n,n))`.
pub fn h1_rhs(n: i64) -> Result<Rational> {
    positive(n)?;
    let c = rat_pow(4, n) / (rat(1 + 2 * n) * binom(2 * n, n));
    let inner: Rational = (1..=n).map(|k| binom(2 * k, k) * rat_pow(2, -k)).sum();
    Ok(&c * inner + c - rat(1))
}

/// `sum_{k=1}^n C(n,k) / k`.
pub fn h2_lhs(n: i64) -> Result<Rational> {
    positive(n)?;
    Ok((1..=n).map(|k| binom(n, k) / rat(k)).sum())
}

/// `-H_n + sum_{k=1}^n 2^k / k`.
pub fn h2_rhs(n: i64) -> Result<Rational> {
    positive(n)?;
    let inner: Rational = (1..=n).map(|k| rat_pow(2, k) / rat(k)).sum();
    Ok(inner - harmonic(n as u64, 1))
}

/// `1 - 4(1+n) s(n) + 2(5+3n) s(n+1) - (5+2n) s(n+2) == 0`.
pub fn check_h1_recurrence<S>(n: i64, s: S) -> Result<bool>
where
    S: Fn(i64) -> Result<Rational>,
{
    let total = rat(1) - rat(4 * (1 + n)) * s(n)? + rat(2 * (5 + 3 * n)) * s(n + 1)? - rat(5 + 2 * n) * s(n + 2)?;
    Ok(total == rat(0))
}

/// `1 - 2(1+n) s(n) + (4+3n) s(n+1) - (2+n) s(n+2) == 0`.
pub fn check_h2_recurrence<S>(n: i64, s: S) -> Result<bool>
where
    S: Fn(i64) -> Result<Rational>,
{
    let total = rat(1) - rat(2 * (1 + n)) * s(n)? + rat(4 + 3 * n) * s(n + 1)? - rat(2 + n) * s(n + 2)?;
    Ok(total == rat(0))
}

/// Outcome of [`run_checks`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentitySummary {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl IdentitySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Both equalities and all four recurrence instances for `1 <= n <= nmax`.
pub fn run_checks(nmax: i64) -> Result<IdentitySummary> {
    positive(nmax)?;
    type Side = fn(i64) -> Result<Rational>;
    let sides: [(&str, Side); 4] = [("h1_lhs", h1_lhs), ("h1_rhs", h1_rhs), ("h2_lhs", h2_lhs), ("h2_rhs", h2_rhs)];
    let tables: Vec<Vec<Rational>> = sides
        .par_iter()
        .map(|(_, f)| (1..=nmax + 2).map(f).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let at = |t: usize| {
        let table = &tables[t];
        move |n: i64| Ok(table[(n - 1) as usize].clone())
    };

    let mut summary = IdentitySummary::default();
    let mut push = |ok: bool, what: String| {
        summary.checks += 1;
        if !ok {
            summary.failures.push(what);
        }
    };
    for n in 1..=nmax {
        let i = (n - 1) as usize;
        push(tables[0][i] == tables[1][i], format!("h1 sides differ at n = {n}"));
        push(tables[2][i] == tables[3][i], format!("h2 sides differ at n = {n}"));
        for (t, (name, _)) in sides.iter().enumerate() {
            let (ok, which) = if t < 2 {
                (check_h1_recurrence(n, at(t))?, "first")
            } else {
                (check_h2_recurrence(n, at(t))?, "second")
            };
            push(ok, format!("{name} breaks the {which} recurrence at n = {n}"));
        }
    }
    Ok(summary)
}
