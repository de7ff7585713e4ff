//! End-to-end binary checks: byte-stable output across repeated runs and
//! across cache miss/hit, plus the documented exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn mhc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mhc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> Vec<u8> {
    let out = mhc(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

#[test]
fn c11_cli_golden() {
    // Identical bytes across repeated uncached runs, for both formats.
    let args = ["hochschild", "--group", "Z3", "--sigma", "char:1", "--degree", "1"];
    let first = stdout_of(&args);
    let second = stdout_of(&args);
    assert_eq!(first, second);
    assert_eq!(
        first,
        b"{\"degree\":1,\"dim\":0,\"dim_image_prev\":1,\"dim_kernel\":1}\n"
    );
    let csv_args = ["mpi", "--group", "D4", "--format", "csv"];
    assert_eq!(stdout_of(&csv_args), stdout_of(&csv_args));

    // The full verification report passes everywhere.
    let report = stdout_of(&["verify", "--group", "S3", "--max-degree", "2"]);
    let parsed: serde_json::Value = serde_json::from_slice(&report).unwrap();
    let rows = parsed.as_array().unwrap();
    assert_eq!(rows.len(), 25, "10 structural checks + 5 identities × 3 degrees");
    assert!(rows.iter().all(|r| r["pass"] == serde_json::Value::Bool(true)));

    // Cache miss and cache hit produce identical bytes, which also match
    // the uncached output.
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let cached_args = [
        "cyclic", "--group", "Z2", "--sigma", "char:1", "--degree", "2", "--cache", cache,
    ];
    let plain = stdout_of(&cached_args[..7]);
    let miss = stdout_of(&cached_args);
    let entries: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(entries.len(), 1, "one cache record: {entries:?}");
    assert_eq!(entries[0].extension().unwrap(), "json");
    let record: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&entries[0]).unwrap()).unwrap();
    assert_eq!(record["version"], "1.0.0");
    assert!(record.get("input").is_some() && record.get("output").is_some());
    let hit = stdout_of(&cached_args);
    assert_eq!(miss, hit);
    assert_eq!(plain, hit);

    // Exit codes: 2 on a malformed group spec, 1 on a capacity overflow.
    let usage = mhc(&["hochschild", "--group", "Z99x", "--degree", "1"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(usage.stdout.is_empty());
    assert!(!usage.stderr.is_empty());
    let usage = mhc(&["hochschild", "--group", "Z4", "--sigma", "char:9,9", "--degree", "1"]);
    assert_eq!(usage.status.code(), Some(2));
    let capacity = mhc(&["hochschild", "--group", "Z6", "--degree", "7"]);
    assert_eq!(capacity.status.code(), Some(1));
    assert!(capacity.stdout.is_empty());

    assert!(Path::new(env!("CARGO_BIN_EXE_mhc")).exists());
    println!(
        "criterion 11 cli-golden: PASS (byte-identical JSON across repeated runs and across cache miss/hit; CSV stable; usage and capacity exit codes honored)"
    );
}
