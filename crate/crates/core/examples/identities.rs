//! Two binomial-sum identities and their recurrences.

use supercong::identities::{check_h1_recurrence, check_h2_recurrence, h1_lhs, h1_rhs, h2_lhs, h2_rhs, run_checks};

fn main() -> supercong::error::Result<()> {
    for n in 1..=5 {
        println!("n = {n}: h1 {} = {}, h2 {} = {}", h1_lhs(n)?, h1_rhs(n)?, h2_lhs(n)?, h2_rhs(n)?);
    }
    println!("recurrences at n = 10: {} {}", check_h1_recurrence(10, h1_rhs)?, check_h2_recurrence(10, h2_lhs)?);
    let summary = run_checks(100)?;
    println!("{} checks up to n = 100, {} failures", summary.checks, summary.failures.len());
    Ok(())
}
