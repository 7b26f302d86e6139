//! Fixed-precision `p`-adic numbers for the fast engine.
//!
//! A nonzero value is `p^val * unit` with `unit` a `p`-adic unit known modulo
//! `p^rel`. Units are stored as residues modulo the ring's working modulus
//! `p^R`; digits above `rel` are don't-care. Addition tracks cancellation so
//! that a value never claims more digits than were actually computed, and
//! reduction to a residue fails instead of guessing when precision runs out.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Absolute precision used for an exactly known zero.
const EXACT: i64 = i64::MAX / 4;

/// Working ring `Z/p^R`; `Copy` so that values can carry it inline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ring {
    p: u64,
    prec: u32,
    modulus: u128,
}

impl Ring {
    /// Largest working precision such that `p^R` fits the fast word path
    /// (`< 2^64`), falling back to `< 2^126` when that leaves fewer than
    /// `min_prec` digits.
    pub fn new(p: u64, min_prec: u32) -> Result<Self> {
        let fits = |limit: u128| {
            let mut r = 0u32;
            let mut m = 1u128;
            while let Some(next) = m.checked_mul(p as u128).filter(|&x| x < limit) {
                m = next;
                r += 1;
            }
            (r, m)
        };
        let (mut prec, mut modulus) = fits(1u128 << 64);
        if prec < min_prec {
            (prec, modulus) = fits(1u128 << 126);
        }
        if prec < min_prec {
            return Err(Error::PrecisionLoss {
                prime: p,
                needed: min_prec as i64,
                available: prec as i64,
            });
        }
        Ok(Ring { p, prec, modulus })
    }

    /// A ring with exactly `prec` digits. Panics if `p^prec` does not fit.
    pub fn with_precision(p: u64, prec: u32) -> Self {
        let mut modulus = 1u128;
        for _ in 0..prec {
            modulus = modulus
                .checked_mul(p as u128)
                .filter(|&m| m < 1u128 << 126)
                .expect("working modulus exceeds 2^126");
        }
        Ring { p, prec, modulus }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    fn mul(&self, a: u128, b: u128) -> u128 {
        let m = self.modulus;
        if m <= u64::MAX as u128 {
            return a * b % m;
        }
        // Shift-and-add; operands stay below 2^127.
        let (mut acc, mut a, mut b) = (0u128, a % m, b % m);
        while b > 0 {
            if b & 1 == 1 {
                acc = (acc + a) % m;
            }
            a = (a << 1) % m;
            b >>= 1;
        }
        acc
    }

    fn pow_p(&self, d: u32) -> u128 {
        if d >= self.prec {
            return if d == self.prec { self.modulus } else { 0 };
        }
        (0..d).fold(1u128, |acc, _| acc * self.p as u128)
    }

    fn inverse(&self, a: u128) -> u128 {
        let m = self.modulus as i128;
        let (mut r0, mut r1) = (m, (a % self.modulus) as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "inverting a non-unit");
        t0.rem_euclid(m) as u128
    }

    /// Splits a nonzero integer into `(v_p(n), n / p^v mod p^R)`.
    fn split_i128(&self, n: i128) -> (i64, u128) {
        debug_assert!(n != 0);
        let p = self.p as i128;
        let (mut n, mut v) = (n, 0i64);
        while n % p == 0 {
            n /= p;
            v += 1;
        }
        (v, n.rem_euclid(self.modulus as i128) as u128)
    }
}

/// A `p`-adic number carried to finite precision.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct PAdic {
    ring: Ring,
    /// Valuation if nonzero, absolute precision if zero.
    val: i64,
    /// Zero marks the zero value.
    unit: u128,
    rel: u32,
    poisoned: bool,
}

impl PAdic {
    pub fn zero(ring: Ring) -> Self {
        PAdic {
            ring,
            val: EXACT,
            unit: 0,
            rel: 0,
            poisoned: false,
        }
    }

    fn zero_to(ring: Ring, abs: i64) -> Self {
        PAdic {
            ring,
            val: abs.min(EXACT),
            unit: 0,
            rel: 0,
            poisoned: false,
        }
    }

    fn poisoned(ring: Ring) -> Self {
        PAdic {
            poisoned: true,
            ..PAdic::zero(ring)
        }
    }

    /// `p^val * unit`; `unit` must be coprime to `p`.
    pub fn from_parts(ring: Ring, val: i64, unit: u128) -> Self {
        debug_assert!(!unit.is_multiple_of(ring.p as u128));
        PAdic {
            ring,
            val,
            unit: unit % ring.modulus,
            rel: ring.prec,
            poisoned: false,
        }
    }

    pub fn from_i64(ring: Ring, n: i64) -> Self {
        if n == 0 {
            return PAdic::zero(ring);
        }
        let (v, u) = ring.split_i128(n as i128);
        PAdic::from_parts(ring, v, u)
    }

    pub fn from_bigint(ring: Ring, n: &BigInt) -> Self {
        if let Some(small) = n.to_i128() {
            if small == 0 {
                return PAdic::zero(ring);
            }
            let (v, u) = ring.split_i128(small);
            return PAdic::from_parts(ring, v, u);
        }
        let p = BigInt::from(ring.p);
        let mut n = n.clone();
        let mut v = 0i64;
        loop {
            let (q, r) = n.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            n = q;
            v += 1;
        }
        let u = n.mod_floor(&BigInt::from(ring.modulus));
        PAdic::from_parts(ring, v, u.to_u128().expect("reduced below modulus"))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.unit == 0 && !self.poisoned
    }

    pub fn is_poisoned(&self) -> bool {
        self.poisoned
    }

    /// `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        if self.unit == 0 {
            None
        } else {
            Some(self.val)
        }
    }

    /// Unit part modulo `p^R`; zero for zero.
    pub fn unit(&self) -> u128 {
        self.unit
    }

    /// Number of correct `p`-adic digits, counted from `p^0`.
    pub fn absolute_precision(&self) -> i64 {
        if self.unit == 0 {
            self.val
        } else {
            self.val + self.rel as i64
        }
    }

    pub fn pow(self, exp: i64) -> Self {
        if exp < 0 {
            return PAdic::from_i64(self.ring, 1) / self.pow(-exp);
        }
        let mut acc = PAdic::from_i64(self.ring, 1);
        let mut base = self;
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Residue modulo `p^e`, provided the value is `p`-integral and known to
    /// at least `e` digits.
    pub fn residue(&self, e: u32) -> Result<u128> {
        let p = self.ring.p;
        let need = e as i64;
        if self.poisoned {
            return Err(Error::PrecisionLoss {
                prime: p,
                needed: need,
                available: 0,
            });
        }
        if self.unit == 0 {
            if self.val >= need {
                return Ok(0);
            }
            return Err(Error::PrecisionLoss {
                prime: p,
                needed: need,
                available: self.val,
            });
        }
        if e > self.ring.prec {
            return Err(Error::PrecisionLoss {
                prime: p,
                needed: need,
                available: self.ring.prec as i64,
            });
        }
        if self.val < 0 {
            return Err(Error::NotPIntegral {
                prime: p,
                valuation: (-self.val) as u32,
            });
        }
        if self.val >= need {
            return Ok(0);
        }
        if self.absolute_precision() < need {
            return Err(Error::PrecisionLoss {
                prime: p,
                needed: need,
                available: self.absolute_precision(),
            });
        }
        let m = self.ring.pow_p(e);
        let shift = self.ring.pow_p(self.val as u32);
        Ok(self.ring.mul(self.unit % m, shift) % m)
    }

    pub fn residue_biguint(&self, e: u32) -> Result<BigUint> {
        self.residue(e).map(BigUint::from)
    }
}

impl fmt::Debug for PAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poisoned {
            return write!(f, "PAdic(poisoned, p={})", self.ring.p);
        }
        if self.unit == 0 {
            return write!(f, "PAdic(O({}^{}))", self.ring.p, self.val);
        }
        write!(
            f,
            "PAdic({}^{} * {} + O(p^{}))",
            self.ring.p,
            self.val,
            self.unit,
            self.absolute_precision()
        )
    }
}

impl Mul for PAdic {
    type Output = PAdic;

    fn mul(self, rhs: PAdic) -> PAdic {
        let ring = self.ring;
        if self.poisoned || rhs.poisoned {
            return PAdic::poisoned(ring);
        }
        match (self.unit == 0, rhs.unit == 0) {
            (true, true) => PAdic::zero_to(ring, self.val.saturating_add(rhs.val)),
            (true, false) => PAdic::zero_to(ring, self.val.saturating_add(rhs.val)),
            (false, true) => PAdic::zero_to(ring, rhs.val.saturating_add(self.val)),
            (false, false) => PAdic {
                ring,
                val: self.val + rhs.val,
                unit: ring.mul(self.unit, rhs.unit),
                rel: self.rel.min(rhs.rel),
                poisoned: false,
            },
        }
    }
}

impl Div for PAdic {
    type Output = PAdic;

    fn div(self, rhs: PAdic) -> PAdic {
        let ring = self.ring;
        if self.poisoned || rhs.poisoned || rhs.unit == 0 {
            return PAdic::poisoned(ring);
        }
        if self.unit == 0 {
            let abs = if self.val >= EXACT {
                EXACT
            } else {
                self.val - rhs.val
            };
            return PAdic::zero_to(ring, abs);
        }
        PAdic {
            ring,
            val: self.val - rhs.val,
            unit: ring.mul(self.unit, ring.inverse(rhs.unit)),
            rel: self.rel.min(rhs.rel),
            poisoned: false,
        }
    }
}

impl Neg for PAdic {
    type Output = PAdic;

    fn neg(self) -> PAdic {
        if self.unit == 0 {
            return self;
        }
        PAdic {
            unit: self.ring.modulus - self.unit,
            ..self
        }
    }
}

impl Add for PAdic {
    type Output = PAdic;

    fn add(self, rhs: PAdic) -> PAdic {
        let ring = self.ring;
        if self.poisoned || rhs.poisoned {
            return PAdic::poisoned(ring);
        }
        let abs = self.absolute_precision().min(rhs.absolute_precision());
        if self.unit == 0 || rhs.unit == 0 {
            let other = if self.unit == 0 { rhs } else { self };
            if other.unit == 0 {
                return PAdic::zero_to(ring, abs);
            }
            let rel = (abs - other.val).min(other.rel as i64);
            if rel <= 0 {
                return PAdic::zero_to(ring, abs);
            }
            return PAdic {
                rel: rel as u32,
                ..other
            };
        }
        let base = self.val.min(rhs.val);
        let shift = |x: &PAdic| {
            let d = (x.val - base) as u64;
            if d >= ring.prec as u64 {
                0
            } else {
                ring.mul(x.unit, ring.pow_p(d as u32))
            }
        };
        let sum = (shift(&self) + shift(&rhs)) % ring.modulus;
        let abs = abs.min(base + ring.prec as i64);
        if sum == 0 {
            return PAdic::zero_to(ring, abs);
        }
        let mut t = 0i64;
        let mut unit = sum;
        while unit.is_multiple_of(ring.p as u128) {
            unit /= ring.p as u128;
            t += 1;
        }
        let val = base + t;
        let rel = abs - val;
        if rel <= 0 {
            return PAdic::zero_to(ring, abs);
        }
        PAdic {
            ring,
            val,
            unit,
            rel: rel as u32,
            poisoned: false,
        }
    }
}

impl Sub for PAdic {
    type Output = PAdic;

    fn sub(self, rhs: PAdic) -> PAdic {
        self + (-rhs)
    }
}

impl Sum for PAdic {
    fn sum<I: Iterator<Item = PAdic>>(mut iter: I) -> PAdic {
        let first = iter.next().expect("PAdic::sum needs a first element for its ring");
        iter.fold(first, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::with_precision(5, 6)
    }

    fn pa(n: i64) -> PAdic {
        PAdic::from_i64(ring(), n)
    }

    #[test]
    fn ring_precision_choice() {
        let r = Ring::new(499, 7).unwrap();
        assert_eq!(r.precision(), 7);
        assert!(r.modulus() < 1u128 << 64);
        let r = Ring::new(3, 1).unwrap();
        assert_eq!(r.precision(), 40);
        // Forces the wide path.
        let r = Ring::new(70_001, 5).unwrap();
        assert!(r.modulus() > 1u128 << 64);
        assert!(Ring::new(1_000_003, 7).is_err());
    }

    #[test]
    fn integer_roundtrip() {
        assert_eq!(pa(30).valuation(), Some(1));
        assert_eq!(pa(30).residue(2).unwrap(), 5);
        assert_eq!(pa(-1).residue(3).unwrap(), 124);
        assert_eq!((pa(7) * pa(50)).residue(4).unwrap(), 350);
    }

    #[test]
    fn division_and_negative_valuation() {
        let x = pa(1) / pa(2);
        assert_eq!(x.residue(2).unwrap(), 13);
        let y = pa(3) / pa(25);
        assert_eq!(y.residue(1), Err(Error::NotPIntegral { prime: 5, valuation: 2 }));
        assert_eq!((y * pa(25)).residue(3).unwrap(), 3);
        assert!((pa(1) / PAdic::zero(ring())).is_poisoned());
    }

    #[test]
    fn cancellation_loses_precision() {
        // 1/5 - 1/5 computed through units that agree to R digits.
        let a = pa(1) / pa(5);
        let z = a - a;
        assert!(z.is_zero());
        assert_eq!(z.absolute_precision(), 5);
        // A sum whose leading digits cancel keeps only the surviving digits.
        let big = pa(5i64.pow(5) + 1) - pa(1);
        assert_eq!(big.valuation(), Some(5));
        assert_eq!(big.absolute_precision(), 6);
        assert_eq!(big.residue(5).unwrap(), 0);
        let shallow = (pa(1) / pa(5)) * pa(5);
        assert_eq!(shallow.residue(4).unwrap(), 1);
    }

    #[test]
    fn pow_and_big_inputs() {
        let two = pa(2);
        assert_eq!(two.pow(10).residue(4).unwrap(), 1024 % 625);
        assert_eq!((two.pow(-1) * pa(2)).residue(5).unwrap(), 1);
        let huge = num_traits::pow(BigInt::from(10), 40) + BigInt::from(3);
        let h = PAdic::from_bigint(ring(), &huge);
        assert_eq!(h.residue(3).unwrap(), 3);
        let h = PAdic::from_bigint(ring(), &num_traits::pow(BigInt::from(10), 40));
        assert_eq!(h.valuation(), Some(40));
    }

    #[test]
    fn sum_of_units() {
        let total: PAdic = (1..=4).map(pa).sum();
        assert_eq!(total.residue(2).unwrap(), 10);
    }
}
