//! Primes, Fermat quotients, Euler numbers and harmonic numbers.

use supercong::numthy::{
    double_harmonic, euler_number, euler_number_mod, fermat_quotient, harmonic, harmonic_alt, legendre_minus_one,
    odd_primes,
};

fn main() -> supercong::error::Result<()> {
    let primes = odd_primes(3, 40);
    println!("odd primes below 40: {primes:?}");
    for p in primes {
        println!(
            "p = {p:>2}  (-1/p) = {:>2}  q_p(2) = {}  E_(p-3) mod p = {}",
            legendre_minus_one(p)?,
            fermat_quotient(2, p)?,
            euler_number_mod(p - 3, p)?
        );
    }
    println!("E_0..E_10: {:?}", (0..=10).step_by(2).map(euler_number).collect::<Vec<_>>());
    println!("H_3 = {}, H_2(2) = {}, H_3(-2) = {}", harmonic(3, 1), harmonic(2, 2), harmonic_alt(3, 2));
    println!("H(1,1;3) = {}", double_harmonic(3));
    Ok(())
}
