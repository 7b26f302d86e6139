//! A two-engine sweep rendered in every report format.

use supercong::catalog::{sweep, EngineChoice, ReportFormat, SweepConfig};

fn main() -> supercong::error::Result<()> {
    let mut config = SweepConfig::new(3..=31);
    config.ids = Some(["C-01", "C-06", "A-04-B"].map(String::from).to_vec());
    config.engine = EngineChoice::Both;
    config.jobs = 4;
    config.timing = false;

    let report = sweep(&config)?;
    println!("{}", report.render(ReportFormat::Text, false));
    println!("{}", report.render(ReportFormat::Csv, false).lines().take(4).collect::<Vec<_>>().join("\n"));
    let s = report.summary();
    println!("passed {} of {}, mismatches {}", s.passed, s.checks, s.mismatches);
    Ok(())
}
