//! Evaluation engines shared by every catalog entry.
//!
//! Entry formulas are written once against [`Engine`] and instantiated for
//! the exact rational oracle ([`ExactEngine`]) and the `p`-adic fast engine
//! ([`FastEngine`]). Both are bound to a single prime and keep per-prime
//! caches, so one engine should be created per (prime, worker).

use std::cell::RefCell;
use std::collections::HashMap;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::arith::{self, rat, rat_pow, PrimePower, Rational};
use crate::error::{Error, Result};
use crate::numthy::{self, HarmonicCache, HarmonicKind};
use crate::padic::{PAdic, Ring};

/// Arithmetic backend bound to one odd prime.
pub trait Engine {
    type Value: Clone
        + Add<Output = Self::Value>
        + Sub<Output = Self::Value>
        + Mul<Output = Self::Value>
        + Div<Output = Self::Value>
        + Neg<Output = Self::Value>;

    fn prime(&self) -> u64;

    fn int(&self, n: i64) -> Self::Value;

    fn bigint(&self, n: &BigInt) -> Self::Value;

    fn ratio(&self, num: i64, den: i64) -> Self::Value {
        self.int(num) / self.int(den)
    }

    fn factorial(&self, n: i64) -> Result<Self::Value>;

    /// `C(n, k)`, zero outside `0 <= k <= n`.
    fn binomial(&self, n: i64, k: i64) -> Result<Self::Value>;

    /// `base^exp`; negative exponents give reciprocals.
    fn pow(&self, base: i64, exp: i64) -> Self::Value;

    /// `H_n(r)`.
    fn harmonic(&self, n: i64, r: u32) -> Self::Value;

    /// `H_n(-r)`, sign `(-1)^k` on the `k`-th term.
    fn harmonic_alt(&self, n: i64, r: u32) -> Self::Value;

    /// Fermat quotient `q_p(2)`.
    fn q2(&self) -> Self::Value;

    /// `E_{p-3}` lifted to its representative in `[0, p)`.
    fn euler_p3(&self) -> Self::Value;

    /// `(-1/p)`.
    fn legendre(&self) -> i64 {
        if self.prime() % 4 == 1 {
            1
        } else {
            -1
        }
    }

    /// Canonical residue modulo `p^e`.
    fn reduce(&self, v: &Self::Value, e: u32) -> Result<BigUint>;

    fn zero(&self) -> Self::Value {
        self.int(0)
    }

    /// `(-1)^k` as a value.
    fn sign(&self, k: i64) -> Self::Value {
        self.int(if k.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    fn sum<I>(&self, terms: I) -> Result<Self::Value>
    where
        I: IntoIterator<Item = Result<Self::Value>>,
    {
        let mut acc = self.zero();
        for t in terms {
            acc = acc + t?;
        }
        Ok(acc)
    }
}

/// Which engine produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineKind {
    Exact,
    Fast,
}

impl EngineKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EngineKind::Exact => "exact",
            EngineKind::Fast => "fast",
        }
    }
}

impl std::fmt::Display for EngineKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exact rational reference engine.
pub struct ExactEngine {
    p: u64,
    euler: u64,
    harmonics: RefCell<HashMap<(u32, bool), HarmonicCache>>,
}

impl ExactEngine {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || !numthy::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(ExactEngine {
            p,
            euler: numthy::euler_number_mod(p - 3, p)?,
            harmonics: RefCell::new(HashMap::new()),
        })
    }

    /// Same engine with a different representative of `E_{p-3}` mod `p`.
    pub fn with_euler_representative(mut self, rep: u64) -> Self {
        debug_assert_eq!(rep % self.p, self.euler % self.p);
        self.euler = rep;
        self
    }

    fn cached(&self, n: i64, kind: HarmonicKind) -> Rational {
        let mut caches = self.harmonics.borrow_mut();
        caches
            .entry((kind.order, kind.alternating))
            .or_insert_with(|| HarmonicCache::new(kind))
            .get(n.max(0) as u64)
            .clone()
    }
}

impl Engine for ExactEngine {
    type Value = Rational;

    fn prime(&self) -> u64 {
        self.p
    }

    fn int(&self, n: i64) -> Rational {
        rat(n)
    }

    fn bigint(&self, n: &BigInt) -> Rational {
        Rational::from_integer(n.clone())
    }

    fn factorial(&self, n: i64) -> Result<Rational> {
        arith::factorial(n).map(Rational::from_integer)
    }

    fn binomial(&self, n: i64, k: i64) -> Result<Rational> {
        arith::binomial(n, k).map(Rational::from_integer)
    }

    fn pow(&self, base: i64, exp: i64) -> Rational {
        rat_pow(base, exp)
    }

    fn harmonic(&self, n: i64, r: u32) -> Rational {
        self.cached(n, HarmonicKind::plain(r))
    }

    fn harmonic_alt(&self, n: i64, r: u32) -> Rational {
        self.cached(n, HarmonicKind::alternating(r))
    }

    fn q2(&self) -> Rational {
        Rational::from_integer(numthy::fermat_quotient(2, self.p).expect("odd prime"))
    }

    fn euler_p3(&self) -> Rational {
        rat(self.euler as i64)
    }

    fn reduce(&self, v: &Rational, e: u32) -> Result<BigUint> {
        let m = PrimePower::new(self.p, e)?;
        arith::reduce(v, &m).map(|r| r.value().clone())
    }
}

/// Fixed-precision `p`-adic engine.
pub struct FastEngine {
    ring: Ring,
    euler: u64,
    q2: PAdic,
    factorials: RefCell<Vec<(i64, u128)>>,
    harmonics: RefCell<HashMap<(u32, bool), Vec<PAdic>>>,
}

/// Digits kept beyond the target exponent to absorb denominators divisible
/// by `p`.
pub const GUARD_DIGITS: u32 = 3;

impl FastEngine {
    /// Engine able to certify residues modulo `p^max_exponent`.
    pub fn new(p: u64, max_exponent: u32) -> Result<Self> {
        if p < 3 || !numthy::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        let ring = Ring::new(p, max_exponent + GUARD_DIGITS)?;
        let q2 = PAdic::from_bigint(ring, &numthy::fermat_quotient(2, p)?);
        Ok(FastEngine {
            ring,
            euler: numthy::euler_number_mod(p - 3, p)?,
            q2,
            factorials: RefCell::new(vec![(0, 1)]),
            harmonics: RefCell::new(HashMap::new()),
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    fn factorial_parts(&self, n: usize) -> (i64, u128) {
        let mut table = self.factorials.borrow_mut();
        while table.len() <= n {
            let i = table.len() as i64;
            let (v, u) = *table.last().expect("nonempty");
            let step = PAdic::from_parts(self.ring, v, u) * PAdic::from_i64(self.ring, i);
            table.push((step.valuation().expect("factorials are nonzero"), step.unit()));
        }
        table[n]
    }

    fn factorial_value(&self, n: usize) -> PAdic {
        let (v, u) = self.factorial_parts(n);
        PAdic::from_parts(self.ring, v, u)
    }

    fn cached(&self, n: i64, r: u32, alternating: bool) -> PAdic {
        let n = n.max(0) as usize;
        let mut caches = self.harmonics.borrow_mut();
        let prefix = caches
            .entry((r, alternating))
            .or_insert_with(|| vec![PAdic::zero(self.ring)]);
        while prefix.len() <= n {
            let k = prefix.len() as i64;
            let mut term = PAdic::from_i64(self.ring, 1) / PAdic::from_i64(self.ring, k).pow(r as i64);
            if alternating && k % 2 == 1 {
                term = -term;
            }
            let next = *prefix.last().expect("nonempty") + term;
            prefix.push(next);
        }
        prefix[n]
    }
}

impl Engine for FastEngine {
    type Value = PAdic;

    fn prime(&self) -> u64 {
        self.ring.prime()
    }

    fn int(&self, n: i64) -> PAdic {
        PAdic::from_i64(self.ring, n)
    }

    fn bigint(&self, n: &BigInt) -> PAdic {
        PAdic::from_bigint(self.ring, n)
    }

    fn factorial(&self, n: i64) -> Result<PAdic> {
        if n < 0 {
            return Err(Error::NegativeFactorial(n));
        }
        Ok(self.factorial_value(n as usize))
    }

    fn binomial(&self, n: i64, k: i64) -> Result<PAdic> {
        if n < 0 {
            return Err(Error::NegativeBinomial(n));
        }
        if k < 0 || k > n {
            return Ok(PAdic::zero(self.ring));
        }
        let (n, k) = (n as usize, k as usize);
        Ok(self.factorial_value(n) / (self.factorial_value(k) * self.factorial_value(n - k)))
    }

    fn pow(&self, base: i64, exp: i64) -> PAdic {
        PAdic::from_i64(self.ring, base).pow(exp)
    }

    fn harmonic(&self, n: i64, r: u32) -> PAdic {
        self.cached(n, r, false)
    }

    fn harmonic_alt(&self, n: i64, r: u32) -> PAdic {
        self.cached(n, r, true)
    }

    fn q2(&self) -> PAdic {
        self.q2
    }

    fn euler_p3(&self) -> PAdic {
        PAdic::from_i64(self.ring, self.euler as i64)
    }

    fn reduce(&self, v: &PAdic, e: u32) -> Result<BigUint> {
        PrimePower::new(self.prime(), e)?;
        v.residue_biguint(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, ToPrimitive, Zero};
    use proptest::prelude::*;

    fn agrees_with_exact(e: &FastEngine, q: &Rational, exponent: u32) -> Result<bool> {
        let fast = e.bigint(q.numer()) / e.bigint(q.denom());
        let exact = ExactEngine::new(e.prime())?;
        Ok(e.reduce(&fast, exponent)? == exact.reduce(q, exponent)?)
    }

    fn both(p: u64) -> (ExactEngine, FastEngine) {
        (ExactEngine::new(p).unwrap(), FastEngine::new(p, 4).unwrap())
    }

    #[test]
    fn rejects_bad_primes() {
        assert!(ExactEngine::new(9).is_err());
        assert!(FastEngine::new(2, 1).is_err());
    }

    #[test]
    fn factorials_and_binomials_agree() {
        for p in [3u64, 5, 7, 13, 31] {
            let (x, f) = both(p);
            for n in 0..(6 * p as i64) {
                let a = x.factorial(n).unwrap();
                let b = f.factorial(n).unwrap();
                let v = arith::rational_valuation(&a, p).unwrap();
                assert_eq!(b.valuation(), Some(v));
                for k in [0, 1, n / 3, n / 2, n - 1, n + 1] {
                    let a = x.binomial(n, k).unwrap();
                    let b = f.binomial(n, k).unwrap();
                    if a.is_zero() {
                        assert!(b.is_zero());
                        continue;
                    }
                    let shift = arith::rational_valuation(&a, p).unwrap();
                    let scale = rat_pow(p as i64, -shift);
                    let pscale = f.pow(p as i64, -shift);
                    assert_eq!(
                        x.reduce(&(a * scale), 4).unwrap(),
                        f.reduce(&(b * pscale), 4).unwrap(),
                        "p={p} C({n},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn harmonics_and_constants_agree() {
        for p in [5u64, 7, 11, 13, 97] {
            let (x, f) = both(p);
            for n in 0..p as i64 {
                for r in 1..=3 {
                    assert_eq!(
                        x.reduce(&x.harmonic(n, r), 3).unwrap(),
                        f.reduce(&f.harmonic(n, r), 3).unwrap()
                    );
                    assert_eq!(
                        x.reduce(&x.harmonic_alt(n, r), 3).unwrap(),
                        f.reduce(&f.harmonic_alt(n, r), 3).unwrap()
                    );
                }
            }
            assert_eq!(x.reduce(&x.q2(), 4).unwrap(), f.reduce(&f.q2(), 4).unwrap());
            assert_eq!(
                x.reduce(&x.euler_p3(), 1).unwrap(),
                f.reduce(&f.euler_p3(), 1).unwrap()
            );
            assert_eq!(x.legendre(), numthy::legendre_minus_one(p).unwrap());
        }
    }

    #[test]
    fn harmonic_past_p_has_pole() {
        let (x, f) = both(5);
        assert!(matches!(
            x.reduce(&x.harmonic(7, 1), 1),
            Err(Error::NotPIntegral { prime: 5, valuation: 1 })
        ));
        assert!(matches!(
            f.reduce(&f.harmonic(7, 1), 1),
            Err(Error::NotPIntegral { prime: 5, valuation: 1 })
        ));
        let scaled = f.harmonic(7, 1) * f.int(5);
        assert_eq!(
            f.reduce(&scaled, 2).unwrap(),
            x.reduce(&(x.harmonic(7, 1) * rat(5)), 2).unwrap()
        );
    }

    #[test]
    fn one_is_one() {
        let (_, f) = both(3);
        assert_eq!(f.reduce(&f.int(1), 4).unwrap(), BigUint::one());
    }

    proptest! {
        #[test]
        fn fast_reduction_matches_exact(
            num in -1_000_000_000i64..1_000_000_000,
            den in 1i64..1_000_000,
            pi in 0usize..6,
            e in 1u32..=4,
        ) {
            let p = [3u64, 5, 7, 11, 101, 499][pi];
            prop_assume!(den % p as i64 != 0);
            let f = FastEngine::new(p, 4).unwrap();
            prop_assert!(agrees_with_exact(&f, &arith::ratio(num, den), e).unwrap());
        }

        #[test]
        fn fast_field_ops_match_exact(
            a in -10_000i64..10_000, b in 1i64..10_000,
            c in -10_000i64..10_000, d in 1i64..10_000,
            pi in 0usize..4,
        ) {
            let p = [3u64, 5, 7, 13][pi];
            prop_assume!(b % p as i64 != 0 && d % p as i64 != 0 && c != 0);
            let (x, f) = both(p);
            let (qa, qc) = (arith::ratio(a, b), arith::ratio(c, d));
            let (fa, fc) = (f.ratio(a, b), f.ratio(c, d));
            for (exact, fast) in [
                (&qa + &qc, fa + fc),
                (&qa - &qc, fa - fc),
                (&qa * &qc, fa * fc),
            ] {
                prop_assert_eq!(x.reduce(&exact, 3).unwrap(), f.reduce(&fast, 3).unwrap());
            }
            let quotient = &qa / &qc;
            if arith::rational_valuation(&quotient, p).is_none_or(|v| v >= 0) {
                prop_assert_eq!(
                    x.reduce(&quotient, 2).unwrap().to_u64(),
                    f.reduce(&(fa / fc), 2).unwrap().to_u64()
                );
            }
        }
    }
}
