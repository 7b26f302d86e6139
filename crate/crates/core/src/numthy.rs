//! Number-theoretic primitives: primality, the Legendre symbol `(-1/p)`,
//! Fermat quotients, Euler numbers and the harmonic-type sums
//! `H_n(r)`, `H_n(-r)` and `H(1,1;n)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, rat, ratio, Rational};
use crate::error::{Error, Result};

/// Deterministic primality test.
///
/// Trial division below `2^16`, then a strong probable-prime test with the
/// first twelve prime bases, which is exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 1 << 16 {
        let mut d = 2u64;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        return true;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if BASES.iter().any(|&b| n.is_multiple_of(b)) {
        return false;
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for &a in &BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Odd primes in `lo..=hi`, ascending.
pub fn odd_primes(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(3)..=hi).filter(|&n| is_prime(n)).collect()
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(())
}

/// `(-1/p) = (-1)^((p-1)/2)`.
pub fn legendre_minus_one(p: u64) -> Result<i64> {
    require_odd_prime(p)?;
    Ok(if p % 4 == 1 { 1 } else { -1 })
}

/// Fermat quotient `q_p(a) = (a^(p-1) - 1) / p`.
pub fn fermat_quotient(a: i64, p: u64) -> Result<BigInt> {
    require_odd_prime(p)?;
    if a.rem_euclid(p as i64) == 0 {
        return Err(Error::Domain(format!("{p} divides {a}")));
    }
    let power = num_traits::pow(BigInt::from(a), (p - 1) as usize);
    Ok((power - BigInt::one()) / BigInt::from(p))
}

/// Euler number `E_n` from `sum_{j=0}^{m} C(2m,2j) E_{2j} = 0`, `E_0 = 1`.
pub fn euler_number(n: u64) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let half = (n / 2) as usize;
    let mut evens: Vec<BigInt> = Vec::with_capacity(half + 1);
    evens.push(BigInt::one());
    for m in 1..=half {
        let mut acc = BigInt::zero();
        for (j, e) in evens.iter().enumerate() {
            acc += binomial(2 * m as i64, 2 * j as i64).expect("nonnegative") * e;
        }
        evens.push(-acc);
    }
    evens.pop().expect("at least E_0")
}

/// `E_n mod p` in `[0, p)`, running the same recurrence in `Z/p`.
///
/// The binomials come from successive Pascal rows reduced mod `p`, so no
/// inverse is needed and `n >= p` is fine.
pub fn euler_number_mod(n: u64, p: u64) -> Result<u64> {
    require_odd_prime(p)?;
    if n % 2 == 1 {
        return Ok(0);
    }
    let half = (n / 2) as usize;
    let mut evens = vec![1 % p];
    let mut row = vec![1u64];
    for m in 1..=half {
        for _ in 0..2 {
            let mut next = Vec::with_capacity(row.len() + 1);
            next.push(1);
            for w in row.windows(2) {
                next.push((w[0] + w[1]) % p);
            }
            next.push(1);
            row = next;
        }
        let mut acc = 0u64;
        for (j, e) in evens.iter().enumerate() {
            acc = (acc + row[2 * j] * e) % p;
        }
        evens.push((p - acc) % p);
        debug_assert_eq!(row.len(), 2 * m + 1);
    }
    Ok(evens[half])
}

/// Which harmonic-type sum: `H_n(r)`, or `H_n(-r)` when `alternating`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HarmonicKind {
    pub order: u32,
    pub alternating: bool,
}

impl HarmonicKind {
    pub fn plain(order: u32) -> Self {
        assert!(order >= 1, "harmonic order must be positive");
        HarmonicKind {
            order,
            alternating: false,
        }
    }

    pub fn alternating(order: u32) -> Self {
        assert!(order >= 1, "harmonic order must be positive");
        HarmonicKind {
            order,
            alternating: true,
        }
    }

    /// The `k`-th summand, `(±1)^k / k^r`.
    pub fn term(&self, k: u64) -> Rational {
        let den = num_traits::pow(BigInt::from(k), self.order as usize);
        let sign = if self.alternating && k % 2 == 1 { -1 } else { 1 };
        Rational::new(BigInt::from(sign), den)
    }
}

/// `H_n(r) = sum_{k=1}^{n} 1/k^r`.
pub fn harmonic(n: u64, r: u32) -> Rational {
    let kind = HarmonicKind::plain(r);
    (1..=n).map(|k| kind.term(k)).fold(rat(0), |a, b| a + b)
}

/// `H_n(-r) = sum_{k=1}^{n} (-1)^k / k^r`.
pub fn harmonic_alt(n: u64, r: u32) -> Rational {
    let kind = HarmonicKind::alternating(r);
    (1..=n).map(|k| kind.term(k)).fold(rat(0), |a, b| a + b)
}

/// `H(1,1;n) = sum_{1 <= i < j <= n} 1/(ij)`, by direct double summation.
pub fn double_harmonic(n: u64) -> Rational {
    let mut total = rat(0);
    let mut inner = rat(0);
    for j in 1..=n {
        total += &inner * ratio(1, j as i64);
        inner += ratio(1, j as i64);
    }
    total
}

/// Incrementally extended prefix sums for one [`HarmonicKind`].
#[derive(Debug, Clone)]
pub struct HarmonicCache {
    kind: HarmonicKind,
    prefix: Vec<Rational>,
}

impl HarmonicCache {
    pub fn new(kind: HarmonicKind) -> Self {
        HarmonicCache {
            kind,
            prefix: vec![rat(0)],
        }
    }

    pub fn kind(&self) -> HarmonicKind {
        self.kind
    }

    pub fn get(&mut self, n: u64) -> &Rational {
        while self.prefix.len() as u64 <= n {
            let k = self.prefix.len() as u64;
            let next = self.prefix.last().expect("nonempty") + self.kind.term(k);
            self.prefix.push(next);
        }
        &self.prefix[n as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn primality() {
        assert!(is_prime(7));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert_eq!(is_prime(499), trial_division(499));
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial_division(n), "{n}");
        }
        // Above the trial-division cutoff.
        for n in 65_500..66_500 {
            assert_eq!(is_prime(n), trial_division(n), "{n}");
        }
        assert!(is_prime(1_000_003));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
    }

    #[test]
    fn legendre_values() {
        assert_eq!(legendre_minus_one(5).unwrap(), 1);
        assert_eq!(legendre_minus_one(7).unwrap(), -1);
        assert_eq!(legendre_minus_one(13).unwrap(), 1);
        assert!(legendre_minus_one(2).is_err());
        assert!(legendre_minus_one(15).is_err());
    }

    #[test]
    fn fermat_quotients() {
        assert_eq!(fermat_quotient(2, 3).unwrap(), BigInt::from(1));
        assert_eq!(fermat_quotient(2, 7).unwrap(), BigInt::from(9));
        assert_eq!(fermat_quotient(3, 5).unwrap(), BigInt::from(16));
        assert!(fermat_quotient(10, 5).is_err());
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(euler_number(0), BigInt::from(1));
        assert_eq!(euler_number(2), BigInt::from(-1));
        assert_eq!(euler_number(4), BigInt::from(5));
        assert_eq!(euler_number(6), BigInt::from(-61));
        assert_eq!(euler_number(10), BigInt::from(-50521));
        for n in (1..40).step_by(2) {
            assert!(euler_number(n).is_zero());
        }
    }

    #[test]
    fn euler_numbers_mod_p() {
        assert_eq!(euler_number_mod(4, 7).unwrap(), 5);
        assert_eq!(euler_number_mod(2, 5).unwrap(), 4);
        assert_eq!(euler_number_mod(1, 11).unwrap(), 0);
        for p in odd_primes(3, 31) {
            for n in (0..=40).step_by(2) {
                let exact = euler_number(n);
                let expect = exact.mod_floor_u64(p);
                assert_eq!(euler_number_mod(n, p).unwrap(), expect, "E_{n} mod {p}");
            }
        }
    }

    trait ModFloorU64 {
        fn mod_floor_u64(&self, p: u64) -> u64;
    }

    impl ModFloorU64 for BigInt {
        fn mod_floor_u64(&self, p: u64) -> u64 {
            use num_integer::Integer;
            let r = self.mod_floor(&BigInt::from(p));
            crate::arith::to_u64(&r).unwrap()
        }
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0, 1), rat(0));
        assert_eq!(harmonic(1, 1), rat(1));
        assert_eq!(harmonic(3, 1), ratio(11, 6));
        assert_eq!(harmonic(2, 2), ratio(5, 4));
        assert_eq!(harmonic_alt(1, 1), rat(-1));
        assert_eq!(harmonic_alt(2, 1), ratio(-1, 2));
        assert_eq!(harmonic_alt(3, 2), ratio(-31, 36));
    }

    #[test]
    fn double_harmonic_values() {
        assert_eq!(double_harmonic(0), rat(0));
        assert_eq!(double_harmonic(1), rat(0));
        assert_eq!(double_harmonic(2), ratio(1, 2));
        assert_eq!(double_harmonic(3), rat(1));
    }

    #[test]
    fn double_harmonic_matches_square_identity() {
        let mut h1 = HarmonicCache::new(HarmonicKind::plain(1));
        let mut h2 = HarmonicCache::new(HarmonicKind::plain(2));
        let mut pairs = rat(0);
        for n in 1..=1000u64 {
            // Extend the direct pair sum by the pairs (i, n), i < n.
            pairs += h1.get(n - 1) * ratio(1, n as i64);
            let a = h1.get(n).clone();
            let closed = (&a * &a - h2.get(n)) / rat(2);
            assert_eq!(pairs, closed, "n = {n}");
        }
        assert_eq!(double_harmonic(40), {
            let a = harmonic(40, 1);
            (&a * &a - harmonic(40, 2)) / rat(2)
        });
    }

    #[test]
    fn alternating_halves_even_n() {
        for n in (2..=200).step_by(2) {
            assert_eq!(harmonic_alt(n, 1), -harmonic(n, 1) + harmonic(n / 2, 1));
        }
    }

    #[test]
    fn cache_matches_direct() {
        let mut c = HarmonicCache::new(HarmonicKind::alternating(2));
        assert_eq!(c.get(7).clone(), harmonic_alt(7, 2));
        assert_eq!(c.get(3).clone(), harmonic_alt(3, 2));
        assert_eq!(c.kind(), HarmonicKind::alternating(2));
    }
}
