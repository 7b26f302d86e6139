//! Congruence formulas, written once for every [`Engine`].
//!
//! Each evaluator returns `(lhs, rhs)` for a prime `p` (the engine's) and an
//! index `k`; single congruences ignore `k`.

use std::ops::RangeInclusive;

use crate::engine::{Engine, ExactEngine, FastEngine};
use crate::error::Result;
use crate::summands::{b_sum, b_term, bridge_factor, t_sum};

use super::{CongruenceEntry, Family};

type Pair<V> = Result<(V, V)>;

fn prime<E: Engine>(e: &E) -> i64 {
    e.prime() as i64
}

fn half<E: Engine>(e: &E) -> i64 {
    (prime(e) - 1) / 2
}

fn scaled<E: Engine>(e: &E, c: E::Value, x: i64) -> E::Value {
    c * e.int(x)
}

fn c01<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = t_sum(e, (p - 3) / 2)?;
    Ok((lhs, e.int(6 * p + 16 * p * p * e.legendre())))
}

fn c03<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let l = e.int(e.legendre());
    let lhs = t_sum(e, (p - 3) / 2)?;
    let p3 = e.pow(p, 3);
    let rhs = e.int(6 * p)
        + (e.int(16 * p * p + 52 * p * p * p) - e.int(48) * p3.clone() * e.q2()) * l.clone()
        - e.int(12) * p3 * l * e.euler_p3();
    Ok((lhs, rhs))
}

fn c04<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    Ok((t_sum(e, p - 1)?, e.int(9 * p)))
}

fn central_over_two_pow<E: Engine>(e: &E) -> Result<E::Value> {
    e.sum((1..=half(e)).map(|k| Ok(e.binomial(2 * k, k)? / e.pow(2, k))))
}

fn c05<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    Ok((central_over_two_pow(e)?, e.int(e.legendre() - 1)))
}

fn c06<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let l = e.legendre();
    let inner = e.sum((1..=half(e)).map(|k| Ok(e.pow(2, k) / e.int(k))))?;
    let rhs = -(e.ratio(p * l, 2) * inner) + e.int(l - 1);
    Ok((central_over_two_pow(e)?, rhs))
}

fn l21a<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let lhs = e.sum((1..=half(e)).map(|k| Ok(e.sign(k) * e.harmonic(k, 1) / e.int(k))))?;
    let q = e.q2();
    Ok((lhs, q.clone() * q / e.int(2) + e.int(e.legendre()) * e.euler_p3()))
}

fn l21b<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.sum((1..=(p - 1) / 4).map(|j| Ok(e.harmonic(4 * j, 1) / e.int(4 * j))))?;
    let q = e.q2();
    Ok((lhs, e.ratio(5, 16) * q.clone() * q))
}

fn l21c<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let lhs = e.sum((1..=half(e)).map(|k| Ok(e.harmonic(2 * k, 1) / e.int(k))))?;
    let q = e.q2();
    Ok((lhs, q.clone() * q))
}

fn odd_cubic<E: Engine>(e: &E, k: i64) -> E::Value {
    e.sign(k) / e.int((2 * k + 1) * (2 * k + 3) * (2 * k + 5))
}

fn l22a<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.sum((1..=(p - 7) / 2).map(|k| Ok(odd_cubic(e, k))))?;
    let q = e.q2();
    let inner = q.clone() / e.int(4) - e.ratio(p, 8) * q.clone() * q - e.ratio(11 * p, 128) - e.ratio(5, 32);
    Ok((lhs, e.int(e.legendre()) * inner - e.ratio(2, 5)))
}

fn l22b<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.sum((1..=(p - 7) / 2).map(|k| Ok(odd_cubic(e, k) * e.harmonic(k, 1))))?;
    let q = e.q2();
    let inner = e.ratio(35, 48) * q.clone() - q.clone() * q.clone() / e.int(2) - e.ratio(77, 72);
    let rhs = e.int(e.legendre()) * inner + q / e.int(3) + e.euler_p3() / e.int(4) - e.ratio(29, 36);
    Ok((lhs, rhs))
}

fn l22c<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.sum((1..=(p - 7) / 2).map(|k| Ok(odd_cubic(e, k) * e.harmonic(2 * k, 1))))?;
    let q = e.q2();
    let inner = e.ratio(19, 48) * q.clone() - q.clone() * q.clone() / e.int(16) - e.ratio(13, 18);
    Ok((lhs, e.int(e.legendre()) * inner + q / e.int(6) - e.ratio(11, 18)))
}

fn wolstenholme<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    Ok((e.harmonic(prime(e) - 1, 1), e.zero()))
}

fn lehmer<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let q = e.q2();
    let rhs = e.int(-2) * q.clone() + scaled(e, q.clone() * q, prime(e));
    Ok((e.harmonic(half(e), 1), rhs))
}

fn alt_half<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    Ok((e.harmonic_alt(half(e), 1), -e.q2()))
}

fn half_square<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    Ok((e.harmonic(half(e), 2), e.zero()))
}

fn quarter_square<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let rhs = e.int(4 * e.legendre()) * e.euler_p3();
    Ok((e.harmonic(prime(e) / 4, 2), rhs))
}

fn quarter<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let q = e.q2();
    let rhs = e.int(-3) * q.clone() + e.ratio(3 * p, 2) * q.clone() * q - e.int(e.legendre() * p) * e.euler_p3();
    Ok((e.harmonic(p / 4, 1), rhs))
}

fn odd_alt_sum<E: Engine>(e: &E) -> Result<E::Value> {
    e.sum((1..=(prime(e) - 3) / 2).map(|k| Ok(e.sign(k) / e.int(1 + 2 * k))))
}

fn odd_alt<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let s = e.legendre();
    let q = e.q2();
    let rhs = e.ratio(s, 2) * q.clone() - e.ratio(s * p, 4) * q.clone() * q - e.int(1);
    Ok((odd_alt_sum(e)?, rhs))
}

fn alt_hk<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.sum((1..=(p - 3) / 2).map(|k| Ok(e.sign(k) * e.harmonic(k, 1) / e.int(1 + 2 * k))))?;
    let q = e.q2();
    let rhs = -(e.int(e.legendre()) * q.clone() * q) + e.euler_p3() / e.int(2);
    Ok((lhs, rhs))
}

fn alt_h2k<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.sum((1..=(p - 3) / 2).map(|k| Ok(e.sign(k) * e.harmonic(2 * k - 1, 1) / e.int(1 + 2 * k))))?;
    let s = e.legendre();
    let q = e.q2();
    let rhs = -(e.ratio(s, 8) * q.clone() * q.clone()) + e.ratio(1 + s, 2) * q - e.int(s + 1);
    Ok((lhs, rhs))
}

fn h_shift<E: Engine>(e: &E, k: i64) -> Pair<E::Value> {
    let n = half(e);
    let rhs = e.harmonic(n, 1) + e.int(2) * e.harmonic(2 * k, 1) - e.harmonic(k, 1);
    Ok((e.harmonic(n - k, 1), rhs))
}

fn h_shift2<E: Engine>(e: &E, k: i64) -> Pair<E::Value> {
    Ok((e.harmonic(prime(e) - 2 * k - 1, 1), e.harmonic(2 * k, 1)))
}

fn binom35<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.binomial((3 * p - 5) / 2, p - 1)?;
    let rhs = e.int(-2 * p * (1 + 3 * p + 9 * p * p)) / (e.int(3) * e.pow(4, p - 1));
    Ok((lhs, rhs))
}

fn morley<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    Ok((e.binomial(p - 1, half(e))?, e.int(e.legendre()) * e.pow(4, p - 1)))
}

fn binom_2p2<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    Ok((e.binomial(2 * p - 2, p - 1)?, e.int(-p - 2 * p * p)))
}

fn a2_value<E: Engine>(e: &E) -> Result<E::Value> {
    let p = prime(e);
    let central = e.binomial(p - 1, half(e))?;
    let first = e.int(72 * (p - 1) * (p - 1) * (p - 1)) / (e.pow(8, p - 1) * e.int((2 * p - 3) * (3 * p - 5)))
        * e.binomial((3 * p - 5) / 2, p - 1)?
        * e.binomial(2 * p - 2, p - 1)?
        * central.clone();
    let second = e.int(6 * p * (p - 1)) / (e.pow(4, p - 1) * e.int(p - 2))
        * (e.int(1) + e.ratio((p - 1) * (p + 4), (p + 1) * (p - 4)))
        * central.clone()
        * central;
    Ok(first + second)
}

fn a03_a2<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let rhs = -(e.int(16 * p * p * (15 + 49 * p) * e.legendre()) / (e.pow(8, p - 1) * e.int(75)))
        + e.ratio(3, 8) * e.pow(4, p - 1) * e.int(16 * p - 20 * p * p + 11 * p * p * p);
    Ok((a2_value(e)?, rhs))
}

fn alt_square<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    Ok((e.harmonic_alt(half(e), 2), e.int(2 * e.legendre()) * e.euler_p3()))
}

fn cubic_sum<E: Engine>(e: &E) -> Result<E::Value> {
    let p = prime(e);
    e.sum((1..=(p - 7) / 2).map(|k| {
        let num = -76 * k * k * k - 308 * k * k - 387 * k - 158;
        let (a, b, c) = (2 * k + 1, 2 * k + 3, 2 * k + 5);
        let den = e.int(2 * a * a * b * b) * e.int(c * c * (k + 1));
        Ok(e.sign(k) * e.int(num) / den)
    }))
}

fn cubic<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let l = e.legendre();
    let q = e.q2();
    let rhs = e.ratio(3007, 1800) - q.clone() / e.int(6) + q * e.ratio(l, 24) - e.ratio(43 * l, 576)
        - e.ratio(7, 8) * e.euler_p3();
    Ok((cubic_sum(e)?, rhs))
}

fn cubic_mid<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let s = e.legendre();
    let n = half(e);
    let rhs = odd_alt_sum(e)? / e.int(12) + e.harmonic_alt(n, 1) / e.int(6)
        - e.ratio(7 * s, 16) * e.harmonic_alt(n, 2)
        - e.ratio(43 * s, 576)
        + e.ratio(3157, 1800);
    Ok((cubic_sum(e)?, rhs))
}

fn a03_7<E: Engine>(e: &E, k: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.binomial(2 * k, k)? * e.binomial(2 * p - 2 * k, p - k)?;
    let inner = e.int(1) - scaled(e, e.harmonic(k - 1, 1), 2 * p) + scaled(e, e.harmonic(2 * k - 1, 1), 2 * p);
    Ok((lhs, e.ratio(-2 * p, k) * inner))
}

fn a03_8<E: Engine>(e: &E, k: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.binomial((3 * p - 5) / 2, k)?;
    let lead = e.sign(k) * e.int((2 * k + 1) * (2 * k + 3)) * e.binomial(2 * k, k)?
        / (e.pow(4, k) * e.int((3 * p - 1) * (3 * p - 3)));
    let den = e.int(1) - e.ratio(3 * p, 2) * e.harmonic(k + 1, 1) + scaled(e, e.harmonic(2 * k + 3, 1), 3 * p);
    Ok((lhs, lead / den))
}

fn a03_9<E: Engine>(e: &E, k: i64) -> Pair<E::Value> {
    let p = prime(e);
    let m = p - 1 - 2 * k;
    let lhs = e.binomial(m, m / 2)?;
    let lead = e.int(e.legendre()) * e.pow(4, p - 1) * e.binomial(2 * k, k)? / e.pow(16, k);
    let inner = e.int(1) - scaled(e, e.harmonic(2 * k, 1), p) + scaled(e, e.harmonic(k, 1), p);
    Ok((lhs, lead * inner))
}

fn a1_value<E: Engine>(e: &E) -> Result<E::Value> {
    let p = prime(e);
    e.sum((1..=(p - 7) / 2).map(|k| {
        let m = p - 3 - 2 * k;
        let num = e.pow(4, k)
            * e.int(3 * p - 4 * k - 6)
            * e.binomial(2 * k, k)?
            * e.binomial(2 * p - 2 * k - 4, p - k - 2)?
            * e.binomial(m, m / 2)?;
        Ok(num / (e.int(3 * p - 2 * k - 5) * e.binomial((3 * p - 5) / 2, k)?))
    }))
}

fn a03_a1<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let four = e.pow(4, p - 1);
    let q = e.q2();
    let e3 = e.euler_p3();
    let leg = e.int(e.legendre());
    let first = (e.ratio(41 * p * p, 32) - e.ratio(p, 4)) * q.clone()
        - e.ratio(7 * p * p, 8) * q.clone() * q
        + (e.ratio(2 * p, 5) + e.ratio(451 * p * p, 900) - e.ratio(p * p, 4) * e3) * leg;
    let rhs = e.ratio(3, 8) * four.clone() * first - e.ratio(3, 8) * four * (e.ratio(51 * p * p, 128) - e.ratio(5 * p, 32));
    Ok((a1_value(e)?, rhs))
}

fn a04_1<E: Engine>(e: &E, k: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.binomial(2 * k, k)? * e.binomial(2 * p - 2 * k, p - k)?;
    let tail = e.harmonic(p + k - 1, 1) - e.harmonic(2 * k - 1, 1);
    Ok((lhs, e.ratio(2 * p, k) * (e.int(1) - scaled(e, tail, 2 * p))))
}

fn a04_2<E: Engine>(e: &E, k: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.binomial(4 * p - 2 * k - 2, 2 * p - k - 1)?;
    let rhs = e.sign(k) * e.int(2 * p) / (e.int(k + 1) * e.binomial(2 * p - k - 1, k + 1)?);
    Ok((lhs, rhs))
}

fn b_first<E: Engine>(e: &E) -> Result<E::Value> {
    let p = prime(e);
    Ok(e.int(6 * p - 3) * e.binomial(4 * p - 2, p - 1)? * e.binomial(2 * p - 2, p - 1)? / e.int(3 * p - 1))
}

fn b_middle<E: Engine>(e: &E) -> Result<E::Value> {
    let p = prime(e);
    let n = half(e);
    let central = e.binomial(p - 1, n)?;
    Ok(e.int(2 * (4 * p - 1)) * e.pow(2, p - 1) * central.clone() * central * e.binomial(3 * p - 1, (3 * p - 1) / 2)?
        / (e.int(5 * p - 1) * e.binomial(3 * p - 1, n)?))
}

fn b_last<E: Engine>(e: &E) -> Result<E::Value> {
    let p = prime(e);
    let c = e.binomial(2 * p - 2, p - 1)?;
    Ok(e.pow(4, p - 1) * e.int(4 * p * p - 1) * c.clone() * c / (e.int(p * p) * e.binomial(3 * p - 1, p - 1)?))
}

fn a04_b<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    Ok((b_sum(e)?, b_first(e)? + b_middle(e)? + b_last(e)?))
}

fn a04_3p2<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.binomial(3 * p - 1, (3 * p - 1) / 2)?;
    let upper = e.harmonic(p - 1, 1) - e.harmonic(half(e), 1);
    let rhs = e.int(2) * (e.int(1) + scaled(e, upper, 2 * p)) * e.binomial(p - 1, half(e))?;
    Ok((lhs, rhs))
}

fn a04_ratio<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.binomial(3 * p - 1, (3 * p - 1) / 2)? / e.binomial(3 * p - 1, half(e))?;
    Ok((lhs, e.int(2) * (e.int(1) + scaled(e, e.harmonic(p - 1, 1), p))))
}

fn a04_5<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    Ok((b_middle(e)?, e.int(4 * (p + 1)) * e.pow(32, p - 1)))
}

fn a04_6<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    Ok((b_last(e)?, -(e.pow(4, p - 1) * e.int(1 + 4 * p))))
}

fn a04_7<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    Ok((b_first(e)?, e.zero()))
}

fn a04_final<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    Ok((bridge_factor(e)? * b_sum(e)?, e.int(9 * p)))
}

fn a04_final_mid<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.int(12 * (p + p * p)) / e.pow(2, p - 1) - e.int(3 * (p + 4 * p * p)) / e.pow(16, p - 1);
    Ok((lhs, e.int(9 * p)))
}

/// The `B` summand after the substitution `k -> p-1-k`.
pub fn reversed_b_term<E: Engine>(e: &E, k: i64) -> Result<E::Value> {
    let p = prime(e);
    let num = e.int((2 * p + 4 * k + 1) * (p - k))
        * e.pow(4, p - 1 - k)
        * e.binomial(2 * k, k)?
        * e.binomial(2 * p - 2 * k, p - k)?
        * e.binomial(2 * p + 2 * k, p + k)?;
    let den = e.int(2 * (2 * p + k) * (2 * p - 2 * k - 1)) * e.binomial(3 * p - 1, p - 1 - k)?;
    Ok(num / den)
}

fn reversed_tail<E: Engine>(e: &E) -> Result<E::Value> {
    e.sum((1..=(prime(e) - 3) / 2).map(|k| reversed_b_term(e, k)))
}

fn upper_tail<E: Engine>(e: &E) -> Result<E::Value> {
    let p = prime(e);
    e.sum(((p + 1) / 2..=p - 2).map(|k| b_term(e, k)))
}

fn central_alt_sum<E: Engine>(e: &E) -> Result<E::Value> {
    e.sum((1..=(prime(e) - 3) / 2).map(|k| {
        Ok(e.binomial(2 * k, k)? * e.int(1 + 4 * k) / (e.pow(-4, k) * e.int(k * (1 + 2 * k))))
    }))
}

fn a05_1<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    Ok((reversed_tail(e)?, scaled(e, central_alt_sum(e)?, 2 * p)))
}

fn a05_2<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    Ok((upper_tail(e)?, e.zero()))
}

fn a05_3<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    Ok((upper_tail(e)?, reversed_tail(e)?))
}

fn a05_4<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    Ok((central_alt_sum(e)?, e.zero()))
}

fn a05_5<E: Engine>(e: &E, k: i64) -> Pair<E::Value> {
    let p = prime(e);
    let lhs = e.pow(-4, k) / e.binomial(2 * k, k)? * e.binomial(half(e), k)?;
    let odd = e.harmonic(2 * k, 1) - e.harmonic(k, 1) / e.int(2);
    Ok((lhs, e.int(1) - scaled(e, odd, p)))
}

fn a05_final<E: Engine>(e: &E, _: i64) -> Pair<E::Value> {
    let p = prime(e);
    let n = half(e);
    let lhs = e.sum((1..=(p - 3) / 2).map(|k| {
        Ok((e.ratio(1, k) + e.ratio(2, 1 + 2 * k)) * e.binomial(n, k)?)
    }))?;
    Ok((lhs, e.zero()))
}

fn zero_to_half(p: u64) -> RangeInclusive<i64> {
    0..=(p as i64 - 1) / 2
}

fn one_to_half_less_one(p: u64) -> RangeInclusive<i64> {
    1..=(p as i64 - 3) / 2
}

fn one_to_half_less_three(p: u64) -> RangeInclusive<i64> {
    1..=(p as i64 - 7) / 2
}

fn upper_half(p: u64) -> RangeInclusive<i64> {
    (p as i64 + 1) / 2..=p as i64 - 2
}

fn one_to_p_less_two(p: u64) -> RangeInclusive<i64> {
    1..=p as i64 - 2
}

const ZERO_TO_HALF: Family = Family {
    label: "0 <= k <= (p-1)/2",
    range: zero_to_half,
};
const ONE_TO_HALF_LESS_ONE: Family = Family {
    label: "1 <= k <= (p-3)/2",
    range: one_to_half_less_one,
};
const ONE_TO_HALF_LESS_THREE: Family = Family {
    label: "1 <= k <= (p-7)/2",
    range: one_to_half_less_three,
};
const UPPER_HALF: Family = Family {
    label: "(p+1)/2 <= k <= p-2",
    range: upper_half,
};
const ONE_TO_P_LESS_TWO: Family = Family {
    label: "1 <= k <= p-2",
    range: one_to_p_less_two,
};

macro_rules! entry {
    ($id:literal, $floor:literal, $exp:literal, $family:expr, $f:ident, $desc:literal, $anchor:literal) => {
        CongruenceEntry {
            id: $id,
            description: $desc,
            min_prime: $floor,
            exponent: $exp,
            family: $family,
            anchor: $anchor,
            exact: $f::<ExactEngine>,
            fast: $f::<FastEngine>,
        }
    };
}

pub(super) static ENTRIES: &[CongruenceEntry] = &[
    entry!("C-01", 3, 3, None, c01,
        "half-range Ramanujan-type sum, p^3 form",
        "sum_{k=0}^{(p-3)/2} t_k == 6p + 16p^2 (-1/p)"),
    entry!("C-03", 3, 4, None, c03,
        "half-range Ramanujan-type sum, p^4 form",
        "sum_{k=0}^{(p-3)/2} t_k == 6p + (16p^2+52p^3-48p^3 q_p(2))(-1/p) - 12p^3 (-1/p) E_{p-3}"),
    entry!("C-04", 3, 3, None, c04,
        "full-range Ramanujan-type sum",
        "sum_{k=0}^{p-1} t_k == 9p"),
    entry!("C-05", 3, 1, None, c05,
        "central binomials over powers of two, mod p",
        "sum_{k=1}^{(p-1)/2} C(2k,k)/2^k == (-1/p) - 1"),
    entry!("C-06", 3, 2, None, c06,
        "central binomials over powers of two, mod p^2",
        "sum_{k=1}^{(p-1)/2} C(2k,k)/2^k == -(p/2)(-1/p) sum_{k=1}^{(p-1)/2} 2^k/k + (-1/p) - 1"),
    entry!("L-2.1a", 5, 1, None, l21a,
        "alternating harmonic-weighted sum",
        "sum_{k=1}^{(p-1)/2} (-1)^k H_k/k == q_p(2)^2/2 + (-1/p) E_{p-3}"),
    entry!("L-2.1b", 5, 1, None, l21b,
        "harmonic sum over multiples of four",
        "sum_{k=1, 4|k}^{p-1} H_k/k == (5/16) q_p(2)^2"),
    entry!("L-2.1c", 5, 1, None, l21c,
        "even-index harmonic sum",
        "sum_{k=1}^{(p-1)/2} H_{2k}/k == q_p(2)^2"),
    entry!("L-2.2a", 7, 2, None, l22a,
        "alternating sum over three consecutive odd numbers",
        "sum_{k=1}^{(p-7)/2} (-1)^k/((2k+1)(2k+3)(2k+5)) == (-1/p)(q/4 - (p/8)q^2 - 11p/128 - 5/32) - 2/5"),
    entry!("L-2.2b", 7, 1, None, l22b,
        "the same sum weighted by H_k",
        "sum_{k=1}^{(p-7)/2} (-1)^k H_k/((2k+1)(2k+3)(2k+5)) == (-1/p)(35q/48 - q^2/2 - 77/72) + q/3 + E_{p-3}/4 - 29/36"),
    entry!("L-2.2c", 7, 1, None, l22c,
        "the same sum weighted by H_{2k}",
        "sum_{k=1}^{(p-7)/2} (-1)^k H_{2k}/((2k+1)(2k+3)(2k+5)) == (-1/p)(19q/48 - q^2/16 - 13/18) + q/6 - 11/18"),
    entry!("A-Wolstenholme", 5, 2, None, wolstenholme,
        "Wolstenholme's congruence",
        "H_{p-1} == 0"),
    entry!("A-Lehmer", 3, 2, None, lehmer,
        "Lehmer's half harmonic number",
        "H_{(p-1)/2} == -2q_p(2) + p q_p(2)^2"),
    entry!("A-AltHalf", 3, 1, None, alt_half,
        "alternating half harmonic number",
        "H_{(p-1)/2}(-1) == -q_p(2)"),
    entry!("A-HalfSq", 5, 1, None, half_square,
        "half harmonic number of order two",
        "H_{(p-1)/2}(2) == 0"),
    entry!("A-Quarter2", 5, 1, None, quarter_square,
        "quarter harmonic number of order two",
        "H_{floor(p/4)}(2) == 4(-1/p) E_{p-3}"),
    entry!("A-Quarter1", 5, 2, None, quarter,
        "quarter harmonic number",
        "H_{floor(p/4)} == -3q_p(2) + (3p/2) q_p(2)^2 - (-1/p) p E_{p-3}"),
    entry!("A-OddAlt", 5, 2, None, odd_alt,
        "alternating reciprocals of odd numbers",
        "sum_{k=1}^{(p-3)/2} (-1)^k/(1+2k) == (-1)^{(p-1)/2}(q/2 - (p/4) q^2) - 1"),
    entry!("A-AltHk", 5, 1, None, alt_hk,
        "odd alternating sum weighted by H_k",
        "sum_{k=1}^{(p-3)/2} (-1)^k H_k/(1+2k) == -(-1)^{(p-1)/2} q^2 + E_{p-3}/2"),
    entry!("A-AltH2k", 5, 1, None, alt_h2k,
        "odd alternating sum weighted by H_{2k-1}",
        "sum_{k=1}^{(p-3)/2} (-1)^k H_{2k-1}/(1+2k) == -(-1)^{(p-1)/2} q^2/8 + (1+(-1)^{(p-1)/2}) q/2 - (-1)^{(p-1)/2} - 1"),
    entry!("A-Hshift", 3, 1, Some(ZERO_TO_HALF), h_shift,
        "shifted half harmonic numbers",
        "H_{(p-1)/2-k} == H_{(p-1)/2} + 2H_{2k} - H_k"),
    entry!("A-Hshift2", 3, 1, Some(ZERO_TO_HALF), h_shift2,
        "reflected harmonic numbers",
        "H_{p-2k-1} == H_{2k}"),
    entry!("A-03-binom35", 5, 4, None, binom35,
        "binomial C((3p-5)/2, p-1)",
        "C((3p-5)/2, p-1) == -2p(1+3p+9p^2) / (3 * 4^{p-1})"),
    entry!("A-Morley", 5, 3, None, morley,
        "Morley's congruence",
        "C(p-1, (p-1)/2) == (-1)^{(p-1)/2} 4^{p-1}"),
    entry!("A-03-2p2", 3, 3, None, binom_2p2,
        "binomial C(2p-2, p-1)",
        "C(2p-2, p-1) == -p - 2p^2"),
    entry!("A-03-A2", 7, 4, None, a03_a2,
        "boundary part A_2 of the half-row telescope",
        "A_2 == -16p^2(15+49p)(-1/p) / (75 * 8^{p-1}) + (3/8) 4^{p-1} (16p - 20p^2 + 11p^3)"),
    entry!("A-03-AltSq", 5, 1, None, alt_square,
        "alternating half harmonic number of order two",
        "H_{(p-1)/2}(-2) == 2(-1)^{(p-1)/2} E_{p-3}"),
    entry!("A-03-Cubic", 7, 1, None, cubic,
        "rational cubic-weighted alternating sum",
        "sum_{k=1}^{(p-7)/2} (-1)^k(-76k^3-308k^2-387k-158) / (2(2k+1)^2(2k+3)^2(2k+5)^2(k+1)) == 3007/1800 - q/6 + (-1/p) q/24 - 43(-1/p)/576 - 7E_{p-3}/8"),
    entry!("A-03-Cubic-mid", 7, 1, None, cubic_mid,
        "the cubic-weighted sum before the harmonic evaluations",
        "sum (cubic-weighted) == (1/12) sum (-1)^k/(1+2k) + H_{(p-1)/2}(-1)/6 - (7/16)(-1)^{(p-1)/2} H_{(p-1)/2}(-2) - 43(-1)^{(p-1)/2}/576 + 3157/1800"),
    entry!("A-03-7", 5, 3, Some(ONE_TO_HALF_LESS_ONE), a03_7,
        "product of two central-type binomials",
        "C(2k,k) C(2p-2k,p-k) == -2p(1 - 2pH_{k-1} + 2pH_{2k-1}) / k"),
    entry!("A-03-8", 7, 2, Some(ONE_TO_HALF_LESS_THREE), a03_8,
        "binomial C((3p-5)/2, k)",
        "C((3p-5)/2, k) == (-1)^k(2k+1)(2k+3) C(2k,k) / (4^k (3p-1)(3p-3) (1 - (3p/2) H_{k+1} + 3p H_{2k+3}))"),
    entry!("A-03-9", 3, 2, Some(ZERO_TO_HALF), a03_9,
        "central binomial C(p-1-2k, (p-1-2k)/2)",
        "C(p-1-2k, (p-1-2k)/2) == (-1)^{(p-1)/2} 4^{p-1} C(2k,k)/16^k (1 - pH_{2k} + pH_k)"),
    entry!("A-03-A1", 7, 3, None, a03_a1,
        "interior part A_1 of the half-row telescope",
        "A_1 == (3/8)4^{p-1}((41p^2/32 - p/4) q - 7p^2 q^2/8 + (2p/5 + 451p^2/900 - p^2 E_{p-3}/4)(-1/p)) - (3/8)4^{p-1}(51p^2/128 - 5p/32)"),
    entry!("A-04-1", 5, 3, Some(UPPER_HALF), a04_1,
        "product of two central-type binomials, upper range",
        "C(2k,k) C(2p-2k,p-k) == (2p/k)(1 - 2p sum_{i=2k}^{p+k-1} 1/i)"),
    entry!("A-04-2", 5, 1, Some(ONE_TO_P_LESS_TWO), a04_2,
        "binomial C(4p-2k-2, 2p-k-1)",
        "C(4p-2k-2, 2p-k-1) == 2(-1)^k p / ((k+1) C(2p-k-1, k+1))"),
    entry!("A-04-B", 5, 2, None, a04_b,
        "full-row sum B reduced to three boundary terms",
        "B == (6p-3)C(4p-2,p-1)C(2p-2,p-1)/(3p-1) + 2(4p-1)2^{p-1}C(p-1,(p-1)/2)^2 C(3p-1,(3p-1)/2)/((5p-1)C(3p-1,(p-1)/2)) + 4^{p-1}(4p^2-1)C(2p-2,p-1)^2/(p^2 C(3p-1,p-1))"),
    entry!("A-04-3p2", 5, 2, None, a04_3p2,
        "binomial C(3p-1, (3p-1)/2)",
        "C(3p-1, (3p-1)/2) == 2(1 + 2p sum_{j=(p+1)/2}^{p-1} 1/j) C(p-1, (p-1)/2)"),
    entry!("A-04-ratio", 5, 2, None, a04_ratio,
        "ratio of two binomials with top 3p-1",
        "C(3p-1, (3p-1)/2) / C(3p-1, (p-1)/2) == 2(1 + pH_{p-1})"),
    entry!("A-04-5", 5, 2, None, a04_5,
        "middle boundary term of B",
        "2(4p-1)2^{p-1}C(p-1,(p-1)/2)^2 C(3p-1,(3p-1)/2)/((5p-1)C(3p-1,(p-1)/2)) == 4(p+1)32^{p-1}"),
    entry!("A-04-6", 5, 2, None, a04_6,
        "last boundary term of B",
        "4^{p-1}(4p^2-1)C(2p-2,p-1)^2/(p^2 C(3p-1,p-1)) == -4^{p-1}(1+4p)"),
    entry!("A-04-7", 5, 2, None, a04_7,
        "first boundary term of B",
        "(6p-3)C(4p-2,p-1)C(2p-2,p-1)/(3p-1) == 0"),
    entry!("A-04-final", 5, 3, None, a04_final,
        "full-range sum through B",
        "192p C(3p-1,2p) B / 64^p == 9p"),
    entry!("A-04-final-mid", 5, 3, None, a04_final_mid,
        "full-range sum after evaluating the boundary terms",
        "12(p+p^2)/2^{p-1} - 3(p+4p^2)/16^{p-1} == 9p"),
    entry!("A-05-1", 5, 2, None, a05_1,
        "reversed upper tail of B",
        "sum_{k=1}^{(p-3)/2} B_{p-1-k} == 2p sum_{k=1}^{(p-3)/2} C(2k,k)(1+4k)/((-4)^k k(1+2k))"),
    entry!("A-05-2", 5, 2, None, a05_2,
        "upper tail of B",
        "sum_{k=(p+1)/2}^{p-2} B_k == 0"),
    entry!("A-05-3", 5, 4, None, a05_3,
        "index reversal of the upper tail of B",
        "sum_{k=(p+1)/2}^{p-2} B_k = sum_{k=1}^{(p-3)/2} B_{p-1-k}"),
    entry!("A-05-4", 5, 1, None, a05_4,
        "alternating central binomial sum",
        "sum_{k=1}^{(p-3)/2} C(2k,k)(1+4k)/((-4)^k k(1+2k)) == 0"),
    entry!("A-05-5", 5, 2, Some(ZERO_TO_HALF), a05_5,
        "half binomial against a central binomial",
        "(-4)^k C((p-1)/2, k) / C(2k,k) == 1 - p sum_{j=1}^{k} 1/(2j-1)"),
    entry!("A-05-final", 5, 1, None, a05_final,
        "binomial sum with weights 1/k + 2/(1+2k)",
        "sum_{k=1}^{(p-3)/2} (1/k + 2/(1+2k)) C((p-1)/2, k) == 0"),
];
