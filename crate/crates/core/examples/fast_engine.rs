//! The same formula evaluated by the exact and the p-adic engine.

use std::time::Instant;

use supercong::engine::{Engine, ExactEngine, FastEngine};
use supercong::summands::t_sum;

fn main() -> supercong::error::Result<()> {
    let p = 199;
    let exact = ExactEngine::new(p)?;
    let fast = FastEngine::new(p, 4)?;

    let start = Instant::now();
    let x = exact.reduce(&t_sum(&exact, p as i64 - 1)?, 3)?;
    let slow = start.elapsed();
    let start = Instant::now();
    let f = fast.reduce(&t_sum(&fast, p as i64 - 1)?, 3)?;
    let quick = start.elapsed();

    println!("sum_(k<p) t_k mod {p}^3: exact {x} in {slow:?}, fast {f} in {quick:?}");
    println!("9p = {}", 9 * p);
    let h = fast.harmonic(p as i64 + 3, 1);
    println!("H_(p+3) carries a pole: {:?} -> {}", h, fast.reduce(&h, 1).unwrap_err());
    Ok(())
}
