use std::process::{Command, Output};

fn supercong(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supercong"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    supercong(args).status.code().expect("exit code")
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["verify", "--primes", "7..7", "--ids", "all"]), 0);
    assert_eq!(code(&["verify", "--primes", "4..4"]), 2);
    assert_eq!(code(&["verify", "--primes", "5..5", "--ids", "NOPE"]), 2);
    assert_eq!(code(&["verify"]), 2);
    assert_eq!(code(&["verify", "--primes", "5..5", "--jobs", "0"]), 2);
    assert_eq!(code(&["list"]), 0);
    assert_eq!(code(&["wz", "--nmax", "4", "--kmax", "6", "--pmax", "13"]), 0);
    assert_eq!(code(&["identities", "--nmax", "20"]), 0);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn unknown_id_is_named() {
    let out = supercong(&["verify", "--primes", "5..7", "--ids", "C-03,Q-7"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("Q-7"));
}

#[test]
fn parallel_output_matches_serial() {
    for format in ["text", "json", "csv"] {
        let run = |jobs: &str| {
            supercong(&[
                "verify", "--primes", "3..41", "--engine", "both", "--jobs", jobs, "--format", format,
                "--no-timing", "--include-skips",
            ])
            .stdout
        };
        let serial = run("1");
        assert!(!serial.is_empty());
        assert_eq!(serial, run("8"), "{format}");
    }
}

#[test]
fn csv_report_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = supercong(&[
        "verify", "--primes", "3..13", "--ids", "C-05,L-2.2a", "--format", "csv", "--out",
        path.to_str().unwrap(), "--include-skips", "--no-timing",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("entry_id,prime,exponent,lhs,rhs,pass,engine,elapsed_us"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.contains(&"L-2.2a,5,2,skip,skip,true,exact,0"));
    assert!(rows.iter().all(|r| r.ends_with(",0")));
}

#[test]
fn json_report_shape() {
    let out = supercong(&["verify", "--primes", "5..11", "--ids", "A-Morley", "--format", "json", "--engine", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 6);
    assert_eq!(v["summary"]["mismatches"], 0);
    assert!(v["errors"].as_array().unwrap().is_empty());
}
