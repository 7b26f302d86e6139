use num_bigint::BigInt;
use proptest::prelude::*;
use supercong::arith::{factorial, ratio, reduce, FactorialRatio, PrimePower, Rational, Residue};
use supercong::numthy::odd_primes;

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(odd_primes(3, 97))
}

proptest! {
    #[test]
    fn reduction_is_compatible_across_exponents(p in small_prime(), num in -1_000_000i64..1_000_000, den in 1i64..100_000, e in 2u32..=4) {
        prop_assume!(den % p as i64 != 0);
        let q = ratio(num, den);
        let hi = reduce(&q, &PrimePower::new(p, e).unwrap()).unwrap();
        let lo = reduce(&q, &PrimePower::new(p, e - 1).unwrap()).unwrap();
        prop_assert_eq!(hi.project(e - 1).unwrap(), lo);
    }

    #[test]
    fn reduction_is_a_ring_homomorphism(p in small_prime(), a in -10_000i64..10_000, b in 1i64..10_000, c in -10_000i64..10_000, d in 1i64..10_000, e in 1u32..5) {
        prop_assume!(b % p as i64 != 0 && d % p as i64 != 0);
        let m = PrimePower::new(p, e).unwrap();
        let (x, y) = (ratio(a, b), ratio(c, d));
        let (rx, ry) = (reduce(&x, &m).unwrap(), reduce(&y, &m).unwrap());
        prop_assert_eq!(reduce(&(&x + &y), &m).unwrap(), rx.checked_add(&ry).unwrap());
        prop_assert_eq!(reduce(&(&x * &y), &m).unwrap(), rx.checked_mul(&ry).unwrap());
    }

    #[test]
    fn factorial_ratio_matches_direct_quotient(num in prop::collection::vec(0i64..40, 0..4), den in prop::collection::vec(0i64..40, 0..4), s in -50i64..50) {
        let direct = num.iter().map(|&n| factorial(n).unwrap()).product::<BigInt>();
        let below = den.iter().map(|&n| factorial(n).unwrap()).product::<BigInt>();
        let expected = Rational::new(direct, below) * Rational::from_integer(s.into());
        prop_assert_eq!(FactorialRatio::new(num, den, Rational::from_integer(s.into())).eval().unwrap(), expected);
    }

    #[test]
    fn integers_reduce_to_their_residue(p in small_prime(), n in any::<i64>(), e in 1u32..5) {
        let m = PrimePower::new(p, e).unwrap();
        let big = BigInt::from(n);
        prop_assert_eq!(reduce(&Rational::from_integer(big.clone()), &m).unwrap(), Residue::from_int(&big, m));
    }
}
