//! The WZ pair `(F, G)` behind the `p^3` supercongruence, its difference
//! equation and the telescoped identities that follow from it.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{binomial, eval_factorial_ratio, rat, rat_pow, ratio, FactorialRatio, Rational};
use crate::engine::ExactEngine;
use crate::error::{Error, Result};
use crate::numthy::odd_primes;
use crate::summands::{b_sum, bridge_factor, t_sum};

/// A lattice point `(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct WzPoint {
    pub n: i64,
    pub k: i64,
}

/// The quartic `alpha(n, k)` in the numerator of `G`.
pub fn alpha(n: i64, k: i64) -> BigInt {
    let (n, k) = (BigInt::from(n), BigInt::from(k));
    let terms: [(i64, u32, u32); 14] = [
        (4, 0, 4),
        (-44, 1, 3),
        (180, 2, 2),
        (-308, 3, 1),
        (184, 4, 0),
        (-12, 0, 3),
        (98, 1, 2),
        (-260, 2, 1),
        (214, 3, 0),
        (11, 0, 2),
        (-62, 1, 1),
        (79, 2, 0),
        (-3, 0, 1),
        (9, 1, 0),
    ];
    terms
        .iter()
        .map(|&(c, i, j)| BigInt::from(c) * num_traits::pow(n.clone(), i as usize) * num_traits::pow(k.clone(), j as usize))
        .sum()
}

/// Factorial-ratio form of `F(n, k)`.
pub fn f_ratio(n: i64, k: i64) -> FactorialRatio {
    FactorialRatio::new(
        vec![2 * k, 4 * n - 2 * k - 2, 3 * n - k - 2, 2 * n - 2 * k - 2],
        vec![2 * n - k - 1, 2 * n - k - 1, n - k - 1, n - k - 1, 2 * n, n - 1, k],
        rat(n * (6 * n - 4 * k - 3)) * rat_pow(2, -(6 * n - 2 * k)),
    )
}

/// Factorial-ratio form of `G(n, k)`.
pub fn g_ratio(n: i64, k: i64) -> FactorialRatio {
    FactorialRatio::new(
        vec![4 * n - 2 * k, 3 * n - k - 1, 2 * n - 2 * k, 2 * k],
        vec![2 * n - k + 1, 2 * n - k, n - k, n - k, 2 * n + 1, n, k],
        -Rational::from_integer(alpha(n, k)) * rat_pow(2, -(6 * n - 2 * k + 6)),
    )
}

#[allow(non_snake_case)]
pub fn wz_F(n: i64, k: i64) -> Result<Rational> {
    eval_factorial_ratio(&f_ratio(n, k))
}

/// `G(n, k)`, zero for `n < k`.
#[allow(non_snake_case)]
pub fn wz_G(n: i64, k: i64) -> Result<Rational> {
    if n < k {
        return Ok(rat(0));
    }
    eval_factorial_ratio(&g_ratio(n, k))
}

/// `F(n+1,k) - F(n,k) == G(n,k+1) - G(n,k)`.
pub fn check_wz_equation(n: i64, k: i64) -> Result<bool> {
    Ok(wz_F(n + 1, k)? - wz_F(n, k)? == wz_G(n, k + 1)? - wz_G(n, k)?)
}

/// `G(n, 0)` in closed form.
pub fn g_closed_form(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::Domain(format!("g_closed_form needs n >= 0, got {n}")));
    }
    let c = binomial(2 * n, n)? * binomial(3 * n, n)? * binomial(4 * n, 2 * n)?;
    Ok(-ratio(92 * n * n + 61 * n + 9, 192 * (2 * n + 1)) * rat_pow(64, -n) * Rational::from_integer(c))
}

/// `G(n, 0)` for the telescoped sums: the factorial form for `n >= 1`, and
/// the closed form at `n = 0`, where the factorial form has an uncancelled
/// pole.
fn g_boundary(n: i64) -> Result<Rational> {
    if n == 0 {
        g_closed_form(0)
    } else {
        wz_G(n, 0)
    }
}

/// `F((p-1)/2, k)` in closed form, for `0 <= k <= (p-3)/2`.
pub fn f_half_closed_form(p: i64, k: i64) -> Result<Rational> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::Domain(format!("f_half_closed_form needs an odd p >= 3, got {p}")));
    }
    if k < 0 || k > (p - 3) / 2 {
        return Err(Error::Domain(format!("k = {k} outside 0..={}", (p - 3) / 2)));
    }
    let b = |n: i64, k: i64| binomial(n, k).map(Rational::from_integer);
    let lead = rat(p - 1) * rat_pow(8, -(p - 1)) * b((3 * p - 5) / 2, p - 1)?;
    let num = rat_pow(4, k)
        * rat(3 * p - 4 * k - 6)
        * b(2 * k, k)?
        * b(2 * p - 2 * k - 4, p - k - 2)?
        * b(p - 3 - 2 * k, (p - 3 - 2 * k) / 2)?;
    let den = rat(3 * p - 2 * k - 5) * b((3 * p - 5) / 2, k)?;
    Ok(lead * num / den)
}

/// `sum_{k<K} F(n+1,k) - sum_{k<K} F(n,k) == G(n,K) - G(n,0)` for `K > n+1`.
pub fn check_row_telescope(n: i64, upper: i64) -> Result<bool> {
    if n < 1 || upper <= n + 1 {
        return Err(Error::Domain(format!("row telescope needs n >= 1 and K > n + 1, got n = {n}, K = {upper}")));
    }
    let mut lhs = rat(0);
    for k in 0..upper {
        lhs += wz_F(n + 1, k)? - wz_F(n, k)?;
    }
    Ok(lhs == wz_G(n, upper)? - g_boundary(n)?)
}

fn odd_prime_arg(p: i64, floor: i64) -> Result<()> {
    if p < floor || !crate::numthy::is_prime(p as u64) {
        return Err(Error::Domain(format!("expected an odd prime >= {floor}, got {p}")));
    }
    Ok(())
}

/// `sum_{k=0}^{p-1} F((p-1)/2, k) == -sum_{n=0}^{(p-3)/2} G(n, 0)`.
pub fn check_half_telescope(p: i64) -> Result<bool> {
    odd_prime_arg(p, 5)?;
    let mut lhs = rat(0);
    for k in 0..p {
        lhs += wz_F((p - 1) / 2, k)?;
    }
    let mut rhs = rat(0);
    for n in 0..=(p - 3) / 2 {
        rhs -= g_boundary(n)?;
    }
    Ok(lhs == rhs)
}

/// `sum_{k=0}^{p-1} F(p, k) == -sum_{n=0}^{p-1} G(n, 0)`, together with the
/// bridge `sum_{k<p} t_k == 192 p C(3p-1,2p) / 64^p * B`.
pub fn check_full_telescope(p: i64) -> Result<bool> {
    odd_prime_arg(p, 3)?;
    let mut lhs = rat(0);
    for k in 0..p {
        lhs += wz_F(p, k)?;
    }
    let mut rhs = rat(0);
    for n in 0..p {
        rhs -= g_boundary(n)?;
    }
    if lhs != rhs {
        return Ok(false);
    }
    let e = ExactEngine::new(p as u64)?;
    Ok(t_sum(&e, p - 1)? == bridge_factor(&e)? * b_sum(&e)?)
}

/// Outcome of a grid run, as reported by the `wz` command.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WzSummary {
    pub equation_points: usize,
    pub closed_form_checks: usize,
    pub telescope_checks: usize,
    /// Human-readable description of every failed or errored check.
    pub failures: Vec<String>,
}

impl WzSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn failure(what: String, r: Result<bool>) -> Option<String> {
    match r {
        Ok(true) => None,
        Ok(false) => Some(format!("{what}: mismatch")),
        Err(err) => Some(format!("{what}: {err}")),
    }
}

fn record(failures: &mut Vec<String>, what: String, r: Result<bool>) {
    failures.extend(failure(what, r));
}

/// Runs the WZ equation on `1 <= n <= nmax, 0 <= k <= kmax`, the closed forms
/// for `n <= nmax` and odd primes `p <= pmax`, row telescopes for
/// `n <= nmax`, and the half and full telescopes for odd primes `p <= pmax`.
pub fn run_checks(nmax: i64, kmax: i64, pmax: i64) -> WzSummary {
    let points: Vec<WzPoint> = (1..=nmax)
        .flat_map(|n| (0..=kmax).map(move |k| WzPoint { n, k }))
        .collect();
    let mut failures: Vec<String> = points
        .par_iter()
        .filter_map(|pt| failure(format!("WZ equation at ({}, {})", pt.n, pt.k), check_wz_equation(pt.n, pt.k)))
        .collect();

    let primes: Vec<i64> = odd_primes(3, pmax.max(0) as u64).into_iter().map(|p| p as i64).collect();
    let mut closed = 0;
    for n in 1..=nmax {
        closed += 1;
        let r = g_closed_form(n).and_then(|g| Ok(g == wz_G(n, 0)?));
        record(&mut failures, format!("G({n}, 0) closed form"), r);
    }
    for &p in &primes {
        for k in 0..=(p - 3) / 2 {
            closed += 1;
            let r = f_half_closed_form(p, k).and_then(|f| Ok(f == wz_F((p - 1) / 2, k)?));
            record(&mut failures, format!("F(({p}-1)/2, {k}) closed form"), r);
        }
        for k in (p - 1) / 2..p {
            closed += 1;
            let r = wz_F((p - 1) / 2, k).map(|f| f.is_zero());
            record(&mut failures, format!("F(({p}-1)/2, {k}) boundary zero"), r);
        }
    }

    let mut telescopes = 0;
    for n in 1..=nmax {
        telescopes += 1;
        record(&mut failures, format!("row telescope n = {n}"), check_row_telescope(n, n + 2));
    }
    let tele: Vec<(String, Result<bool>)> = primes
        .par_iter()
        .flat_map_iter(|&p| {
            let mut out = vec![(format!("full telescope p = {p}"), check_full_telescope(p))];
            if p >= 5 {
                out.push((format!("half telescope p = {p}"), check_half_telescope(p)));
            }
            out
        })
        .collect();
    telescopes += tele.len();
    for (what, r) in tele {
        record(&mut failures, what, r);
    }

    WzSummary {
        equation_points: points.len(),
        closed_form_checks: closed,
        telescope_checks: telescopes,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(0, 0), BigInt::zero());
        assert_eq!(alpha(1, 0), BigInt::from(486));
        assert_eq!(alpha(1, 1), BigInt::from(90));
    }

    #[test]
    fn point_values() {
        for k in 0..6 {
            assert_eq!(wz_F(0, k).unwrap(), rat(0));
        }
        assert_eq!(wz_F(1, 0).unwrap(), ratio(3, 64));
        assert_eq!(wz_F(2, 1).unwrap(), ratio(15, 512));
        assert_eq!(wz_G(2, 5).unwrap(), rat(0));
        assert_eq!(wz_G(1, 0).unwrap(), ratio(-81, 512));
        assert_eq!(wz_G(1, 1).unwrap(), ratio(-15, 512));
        assert_eq!(g_closed_form(1).unwrap(), ratio(-81, 512));
        assert_eq!(g_closed_form(0).unwrap(), ratio(-3, 64));
    }

    #[test]
    fn g_origin_is_outside_domain() {
        assert!(matches!(wz_G(0, 0), Err(Error::OutsideDomain { .. })));
    }

    #[test]
    fn wz_equation_small_grid() {
        for (n, k) in [(1, 0), (3, 1), (2, 4), (1, 1), (2, 2)] {
            assert!(check_wz_equation(n, k).unwrap(), "({n}, {k})");
        }
        // The n = 0 row closes with the closed-form value of G(0, 0).
        assert_eq!(wz_F(1, 0).unwrap() - wz_F(0, 0).unwrap(), wz_G(0, 1).unwrap() - g_closed_form(0).unwrap());
    }

    #[test]
    fn closed_forms() {
        for n in [2, 5] {
            assert_eq!(g_closed_form(n).unwrap(), wz_G(n, 0).unwrap());
        }
        for (p, k) in [(5, 0), (7, 1), (11, 4)] {
            assert_eq!(f_half_closed_form(p, k).unwrap(), wz_F((p - 1) / 2, k).unwrap());
        }
        assert!(f_half_closed_form(11, 5).is_err());
    }

    #[test]
    fn telescopes() {
        for (n, upper) in [(1, 5), (3, 9), (6, 20)] {
            assert!(check_row_telescope(n, upper).unwrap());
        }
        assert!(check_row_telescope(3, 4).is_err());
        for p in [5, 7, 13] {
            assert!(check_half_telescope(p).unwrap());
        }
        for p in [3, 5, 11] {
            assert!(check_full_telescope(p).unwrap());
        }
        assert!(check_half_telescope(3).is_err());
        assert!(check_full_telescope(9).is_err());
    }

    #[test]
    fn small_run() {
        let s = run_checks(1, 1, 5);
        assert!(s.passed(), "{:?}", s.failures);
        assert_eq!(s.equation_points, 2);
    }
}
