//! Checking individual catalog entries.

use supercong::catalog::{check, lookup, registry};
use supercong::engine::{EngineKind, ExactEngine};

fn main() -> supercong::error::Result<()> {
    println!("{} entries registered", registry().len());

    for (id, p) in [("C-03", 5), ("C-04", 3), ("A-Morley", 5), ("A-Lehmer", 5), ("A-03-9", 13)] {
        let r = check(id, p, EngineKind::Exact)?;
        println!("{id:<10} p = {p:<3} mod p^{}: {} vs {} -> {}", r.exponent, r.lhs, r.rhs, r.pass);
    }

    let entry = lookup("C-03")?;
    let (lhs, rhs) = entry.exact_sides(&ExactEngine::new(5)?, 0)?;
    println!("{}: {}\n  lhs = {lhs}\n  rhs = {rhs}", entry.id, entry.anchor);

    match check("L-2.2a", 5, EngineKind::Exact) {
        Ok(_) => unreachable!(),
        Err(e) => println!("{e}"),
    }
    Ok(())
}
