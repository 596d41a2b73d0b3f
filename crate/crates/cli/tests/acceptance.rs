//! The acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p cwfkit-cli --test acceptance -- --nocapture`.

use std::process::Command;

const BOUNDS: usize = 2;

fn suite_json() -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_cwfkit"))
        .args(["suite", "--bounds", &BOUNDS.to_string(), "--json"])
        .output()
        .expect("binary runs");
    (out.status.code(), out.stdout)
}

#[test]
fn acceptance() {
    let mut lines = Vec::new();
    let mut all = true;
    for (id, _) in cwfkit_suite::CRITERIA {
        let report = cwfkit_suite::run_criterion(id, BOUNDS);
        if !report.passed {
            all = false;
            for f in &report.failures {
                eprintln!("    [{id}] {f}");
            }
        }
        lines.push(report.line());
    }

    let first = suite_json();
    let second = suite_json();
    let deterministic = first.0 == Some(0) && second.0 == Some(0) && first.1 == second.1 && !first.1.is_empty();
    all &= deterministic;
    lines.push(format!(
        "{} [8] suite command exits 0 and is byte-identical across runs",
        if deterministic { "PASS" } else { "FAIL" }
    ));

    for l in &lines {
        println!("{l}");
    }
    assert!(all, "acceptance failed:\n{}", lines.join("\n"));
}
