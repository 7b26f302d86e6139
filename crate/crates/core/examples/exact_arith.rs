//! Factorials, binomials, reduction modulo prime powers and factorial ratios.

use supercong::arith::{binomial, factorial, ratio, reduce, FactorialRatio, PrimePower};

fn main() -> supercong::error::Result<()> {
    println!("10! = {}", factorial(10)?);
    println!("C(8, 4) = {}, C(5, 7) = {}", binomial(8, 4)?, binomial(5, 7)?);

    let m = PrimePower::new(3, 3)?;
    for q in [ratio(243, 8), ratio(1, 2), ratio(1, 3)] {
        match reduce(&q, &m) {
            Ok(r) => println!("{q} mod {m} = {}", r.value()),
            Err(e) => println!("{q} mod {m}: {e}"),
        }
    }

    let zero = FactorialRatio::new(vec![-2], vec![-1, -1, -10], ratio(1, 1));
    let pole = FactorialRatio::new(vec![-3], vec![4], ratio(1, 1));
    println!("(-2)! / ((-1)!^2 (-10)!) = {}", zero.eval()?);
    println!("(-3)! / 4! -> {}", pole.eval().unwrap_err());
    Ok(())
}
