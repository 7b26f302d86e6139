//! Exact integer and rational arithmetic.
//!
//! Everything here is exact: factorials and binomials are big integers, and
//! congruences are decided by reducing a [`Rational`] modulo a prime power
//! only at the very end.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numthy::is_prime;

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Default number of memoized factorials.
pub const DEFAULT_FACTORIAL_CAP: usize = 10_000;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den` as a [`Rational`]. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` for any integer exponent; negative exponents invert.
pub fn rat_pow(base: i64, exp: i64) -> Rational {
    let mag = num_traits::pow(BigInt::from(base), exp.unsigned_abs() as usize);
    if exp >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new(BigInt::one(), mag)
    }
}

/// Memoized `n!` table, shared between threads.
///
/// Readers take a shared lock; growth is serialized behind the write lock.
/// Arguments at or beyond the cap are computed on the fly from the largest
/// cached entry.
#[derive(Debug)]
pub struct FactorialTable {
    cap: usize,
    table: RwLock<Vec<BigUint>>,
}

impl FactorialTable {
    pub fn new(cap: usize) -> Self {
        FactorialTable {
            cap: cap.max(1),
            table: RwLock::new(vec![BigUint::one()]),
        }
    }

    /// Process-wide table with [`DEFAULT_FACTORIAL_CAP`] entries.
    pub fn global() -> &'static FactorialTable {
        static GLOBAL: OnceLock<FactorialTable> = OnceLock::new();
        GLOBAL.get_or_init(|| FactorialTable::new(DEFAULT_FACTORIAL_CAP))
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Number of entries currently memoized.
    pub fn len(&self) -> usize {
        self.table.read().expect("factorial table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, n: u64) -> BigUint {
        let n = n as usize;
        {
            let table = self.table.read().expect("factorial table poisoned");
            if n < table.len() {
                return table[n].clone();
            }
        }
        let mut table = self.table.write().expect("factorial table poisoned");
        while table.len() <= n.min(self.cap - 1) {
            let next = table.len();
            let value = &table[next - 1] * BigUint::from(next);
            table.push(value);
        }
        if n < table.len() {
            return table[n].clone();
        }
        let start = table.len();
        let mut acc = table[start - 1].clone();
        drop(table);
        for i in start..=n {
            acc *= BigUint::from(i);
        }
        acc
    }
}

/// `n!` for `n >= 0`.
pub fn factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok(BigInt::from(FactorialTable::global().get(n as u64)))
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeBinomial(n));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let table = FactorialTable::global();
    if (n as usize) < table.cap() {
        let den = table.get(k as u64) * table.get((n - k) as u64);
        return Ok(BigInt::from(table.get(n as u64) / den));
    }
    // Multiplicative formula; every prefix product is itself a binomial.
    let mut acc = BigUint::one();
    for i in 1..=k as u64 {
        acc = acc * BigUint::from(n as u64 - k as u64 + i) / BigUint::from(i);
    }
    Ok(BigInt::from(acc))
}

/// Exponent of `p` in a nonzero integer. Returns `u32::MAX` for zero.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    if n.is_zero() {
        return u32::MAX;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Signed `p`-adic valuation of a rational; `None` for zero.
pub fn rational_valuation(q: &Rational, p: u64) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    Some(valuation(q.numer(), p) as i64 - valuation(q.denom(), p) as i64)
}

/// An odd prime `p` with exponent `e` in `1..=4`; the modulus `p^e` is cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    e: u32,
    modulus: BigUint,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if !(1..=4).contains(&e) {
            return Err(Error::UnsupportedExponent(e));
        }
        Ok(PrimePower {
            p,
            e,
            modulus: num_traits::pow(BigUint::from(p), e as usize),
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    /// The same prime with a smaller exponent.
    pub fn lower(&self, e: u32) -> Result<Self> {
        PrimePower::new(self.p, e)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.e)
    }
}

/// Canonical representative in `[0, p^e)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    value: BigUint,
    modulus: PrimePower,
}

impl Residue {
    pub fn new(value: BigUint, modulus: PrimePower) -> Self {
        let value = value % modulus.modulus();
        Residue { value, modulus }
    }

    pub fn from_int(n: &BigInt, modulus: PrimePower) -> Self {
        let m = BigInt::from(modulus.modulus().clone());
        let value = n.mod_floor(&m).to_biguint().expect("mod_floor is nonnegative");
        Residue { value, modulus }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> &PrimePower {
        &self.modulus
    }

    fn same_modulus(&self, other: &Residue) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.to_string(),
                right: other.modulus.to_string(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Residue) -> Result<Residue> {
        self.same_modulus(other)?;
        Ok(Residue::new(&self.value + &other.value, self.modulus.clone()))
    }

    pub fn checked_sub(&self, other: &Residue) -> Result<Residue> {
        self.same_modulus(other)?;
        let m = self.modulus.modulus();
        Ok(Residue::new(&self.value + m - &other.value, self.modulus.clone()))
    }

    pub fn checked_mul(&self, other: &Residue) -> Result<Residue> {
        self.same_modulus(other)?;
        Ok(Residue::new(&self.value * &other.value, self.modulus.clone()))
    }

    /// Image under the projection `Z/p^e -> Z/p^f` for `f <= e`.
    pub fn project(&self, e: u32) -> Result<Residue> {
        let lower = self.modulus.lower(e)?;
        Ok(Residue::new(self.value.clone(), lower))
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Reduce a `p`-integral rational modulo `p^e`.
pub fn reduce(q: &Rational, m: &PrimePower) -> Result<Residue> {
    let p = m.prime();
    let den_val = valuation(q.denom(), p);
    if den_val > 0 {
        return Err(Error::NotPIntegral {
            prime: p,
            valuation: den_val,
        });
    }
    let modulus = BigInt::from(m.modulus().clone());
    let inv = q
        .denom()
        .mod_floor(&modulus)
        .modinv(&modulus)
        .expect("denominator is a unit modulo p^e");
    let value = (q.numer() * inv).mod_floor(&modulus);
    Ok(Residue {
        value: value.to_biguint().expect("mod_floor is nonnegative"),
        modulus: m.clone(),
    })
}

/// `scalar * prod(n_i!) / prod(d_j!)` with the order-counting convention for
/// negative arguments.
///
/// A factorial at a negative integer is a pole of the Gamma function. With
/// `Z` negative denominator arguments (zeros of the quotient) and `P`
/// negative numerator arguments (poles), the ratio is exactly zero when
/// `Z > P`, the plain quotient when both are zero, and
/// [`Error::OutsideDomain`] otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorialRatio {
    pub numerator_args: Vec<i64>,
    pub denominator_args: Vec<i64>,
    pub scalar: Rational,
}

impl FactorialRatio {
    pub fn new(numerator_args: Vec<i64>, denominator_args: Vec<i64>, scalar: Rational) -> Self {
        FactorialRatio {
            numerator_args,
            denominator_args,
            scalar,
        }
    }

    /// Number of (zeros, poles) contributed by negative arguments.
    pub fn orders(&self) -> (usize, usize) {
        let zeros = self.denominator_args.iter().filter(|&&d| d < 0).count();
        let poles = self.numerator_args.iter().filter(|&&n| n < 0).count();
        (zeros, poles)
    }

    pub fn eval(&self) -> Result<Rational> {
        let (zeros, poles) = self.orders();
        if zeros > poles {
            return Ok(Rational::zero());
        }
        if poles > 0 {
            return Err(Error::OutsideDomain { zeros, poles });
        }
        let mut num = BigInt::one();
        for &a in &self.numerator_args {
            num *= factorial(a)?;
        }
        let mut den = BigInt::one();
        for &d in &self.denominator_args {
            den *= factorial(d)?;
        }
        Ok(&self.scalar * Rational::new(num, den))
    }
}

/// Convenience wrapper over [`FactorialRatio::eval`].
pub fn eval_factorial_ratio(r: &FactorialRatio) -> Result<Rational> {
    r.eval()
}

/// Converts a nonnegative `BigInt` that is known to fit into `u64`.
#[cfg(test)]
pub(crate) fn to_u64(n: &BigInt) -> Option<u64> {
    use num_bigint::Sign;
    use num_traits::ToPrimitive;
    if n.sign() == Sign::Minus {
        return None;
    }
    n.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0).unwrap(), big(1));
        assert_eq!(factorial(5).unwrap(), big(120));
        let direct: i64 = (1..=10).product();
        assert_eq!(factorial(10).unwrap(), big(direct));
        assert_eq!(factorial(-1), Err(Error::NegativeFactorial(-1)));
    }

    #[test]
    fn factorial_beyond_cap() {
        let small = FactorialTable::new(4);
        assert_eq!(small.get(3), BigUint::from(6u32));
        assert_eq!(small.get(7), BigUint::from(5040u32));
        assert_eq!(small.len(), 4);
        assert_eq!(small.get(20), FactorialTable::global().get(20));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2).unwrap(), big(6));
        assert_eq!(binomial(5, 7).unwrap(), big(0));
        assert_eq!(binomial(5, -1).unwrap(), big(0));
        let oracle = factorial(8).unwrap() / (factorial(4).unwrap() * factorial(4).unwrap());
        assert_eq!(binomial(8, 4).unwrap(), oracle);
        assert_eq!(binomial(-3, 1), Err(Error::NegativeBinomial(-3)));
    }

    #[test]
    fn multiplicative_binomial_past_cap() {
        // n above the memo cap takes the multiplicative branch.
        let n = DEFAULT_FACTORIAL_CAP as i64 + 5;
        let b = binomial(n, 3).unwrap();
        let expect = big(n) * big(n - 1) * big(n - 2) / big(6);
        assert_eq!(b, expect);
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=200 {
            for k in 0..=n {
                let lhs = binomial(n, k).unwrap();
                let rhs = binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap();
                assert_eq!(lhs, rhs, "C({n},{k})");
            }
        }
    }

    #[test]
    fn reduce_examples() {
        let m = PrimePower::new(3, 3).unwrap();
        assert_eq!(reduce(&ratio(243, 8), &m).unwrap().value(), &BigUint::from(0u32));
        assert_eq!(reduce(&ratio(1, 2), &m).unwrap().value(), &BigUint::from(14u32));
        assert_eq!(
            reduce(&ratio(1, 3), &m),
            Err(Error::NotPIntegral { prime: 3, valuation: 1 })
        );
        assert_eq!(
            reduce(&ratio(5, 18), &m),
            Err(Error::NotPIntegral { prime: 3, valuation: 2 })
        );
        assert_eq!(reduce(&ratio(-1, 1), &m).unwrap().value(), &BigUint::from(26u32));
    }

    #[test]
    fn prime_power_validation() {
        assert!(PrimePower::new(2, 1).is_err());
        assert!(PrimePower::new(9, 1).is_err());
        assert_eq!(PrimePower::new(5, 5), Err(Error::UnsupportedExponent(5)));
        assert_eq!(PrimePower::new(7, 4).unwrap().modulus(), &BigUint::from(2401u32));
    }

    #[test]
    fn residue_moduli_must_match() {
        let a = Residue::from_int(&big(4), PrimePower::new(5, 2).unwrap());
        let b = Residue::from_int(&big(4), PrimePower::new(5, 3).unwrap());
        assert!(matches!(a.checked_add(&b), Err(Error::ModulusMismatch { .. })));
        let c = Residue::from_int(&big(-3), PrimePower::new(5, 2).unwrap());
        assert_eq!(a.checked_add(&c).unwrap().value(), &BigUint::from(1u32));
        assert_eq!(a.checked_sub(&c).unwrap().value(), &BigUint::from(7u32));
        assert_eq!(a.checked_mul(&c).unwrap().value(), &BigUint::from(13u32));
    }

    #[test]
    fn factorial_ratio_examples() {
        let r = FactorialRatio::new(vec![2], vec![1, 1], rat(1));
        assert_eq!(r.eval().unwrap(), rat(2));
        let r = FactorialRatio::new(vec![4], vec![-1, -1], rat(1));
        assert_eq!(r.eval().unwrap(), rat(0));
        let r = FactorialRatio::new(vec![-2], vec![-1, -1, -10], rat(1));
        assert_eq!(r.orders(), (3, 1));
        assert_eq!(r.eval().unwrap(), rat(0));
        let r = FactorialRatio::new(vec![-2, 3], vec![-1], rat(1));
        assert_eq!(r.eval(), Err(Error::OutsideDomain { zeros: 1, poles: 1 }));
        let r = FactorialRatio::new(vec![-2], vec![5], rat(1));
        assert_eq!(r.eval(), Err(Error::OutsideDomain { zeros: 0, poles: 1 }));
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&big(243), 3), 5);
        assert_eq!(valuation(&big(-50), 5), 2);
        assert_eq!(rational_valuation(&ratio(9, 10), 5), Some(-1));
        assert_eq!(rational_valuation(&rat(0), 5), None);
        assert_eq!(rat_pow(2, -3), ratio(1, 8));
    }
}
