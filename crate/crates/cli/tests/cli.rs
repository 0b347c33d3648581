//! End-to-end CLI behavior: formats, exit codes, determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn natmat(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_natmat"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("spawn natmat")
}

fn stdout_of(args: &[&str]) -> String {
    let out = natmat(args, &[]);
    assert!(out.status.success(), "{args:?}: {:?}", out);
    String::from_utf8(out.stdout).unwrap()
}

fn snapshot_dir() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/oeis")
        .to_string_lossy()
        .into_owned()
}

#[test]
fn tree_table_flags_non_members_except_root() {
    assert_eq!(
        stdout_of(&["tree", "8", "6", "--format", "table"]),
        "16, 33*, 67*, 135*, 271, 543\n"
    );
    assert_eq!(
        stdout_of(&["tree", "0", "5", "--format", "table"]),
        "0, 1, 3, 7, 15\n"
    );
    assert_eq!(stdout_of(&["tree", "1", "1", "--format", "table"]), "2\n");
}

#[test]
fn pack_and_unpack_text() {
    assert_eq!(stdout_of(&["pack", "2", "2", "--format", "table"]), "19\n");
    assert_eq!(
        stdout_of(&["unpack", "19", "--format", "table"]),
        "x=2 y=2\n"
    );
    assert_eq!(stdout_of(&["unpack", "0", "--format", "table"]), "x=0 y=0\n");
}

#[test]
fn pack_handles_wide_values() {
    assert_eq!(
        stdout_of(&["pack", "133", "130", "--format", "table"]),
        "363421567871562278978884080737128449835007\n"
    );
    let out = stdout_of(&[
        "unpack",
        "363421567871562278978884080737128449835007",
        "--format",
        "table",
    ]);
    assert_eq!(out, "x=133 y=130\n");
}

#[test]
fn segment_table_has_descriptor_then_terms() {
    let out = stdout_of(&["segment", "2", "--format", "table"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("S_2: first=3 diff=8 length=4 max=27"));
    assert_eq!(lines.next(), Some("3 11 19 27"));

    let out = stdout_of(&["segment", "4", "--limit", "2", "--format", "table"]);
    assert_eq!(out.lines().nth(1), Some("15 47"));

    let out = stdout_of(&["segment", "0", "--format", "table"]);
    assert_eq!(out.lines().nth(1), Some("0"));
}

#[test]
fn ap_prints_requested_length() {
    assert_eq!(stdout_of(&["ap", "5", "--format", "table"]), "7 23 39 55 71\n");
    assert_eq!(stdout_of(&["ap", "1", "--format", "table"]), "0\n");
    assert_eq!(stdout_of(&["ap", "4", "--format", "table"]), "3 11 19 27\n");
}

#[test]
fn census_csv_rows() {
    let out = stdout_of(&["census", "--from", "1", "--to", "4", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        vec![
            "y,primes,size,percent",
            "1,1,2,50.000",
            "2,3,4,75.000",
            "3,4,8,50.000",
            "4,7,16,43.750",
        ]
    );
}

#[test]
fn census_json_round_trips() {
    let out = stdout_of(&["census", "--from", "1", "--to", "1", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&out).expect("valid JSON");
    let row = &rows.as_array().expect("array")[0];
    assert_eq!(row["y"], 1);
    assert_eq!(row["primes"], 1);
    assert_eq!(row["size"], 2);
    assert_eq!(row["percent"], "50.000");
}

#[test]
fn least_prime_csv_shape_and_json_values() {
    let out = stdout_of(&["least-prime", "--from", "1", "--to", "1", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "y,x,prime,certainty,ratio");
    assert!(lines[1].starts_with("1,1,5,deterministic,"));

    let out = stdout_of(&["least-prime", "--from", "4", "--to", "4", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    let row = &rows[0];
    assert_eq!(row["y"], 4);
    assert_eq!(row["x"], 1);
    assert_eq!(row["prime"], "47");
    assert_eq!(row["certainty"], "deterministic");
    assert!(row["ratio"].as_f64().unwrap() > 0.0);
}

#[test]
fn verify_subcommands_pass() {
    for what in ["trees", "progressions", "bijection", "dyck"] {
        let out = natmat(&["verify", "--what", what, "--bound", "4096"], &[]);
        assert!(out.status.success(), "verify {what} failed: {out:?}");
    }
}

#[test]
fn oeis_checks_pass_against_snapshot() {
    let dir = snapshot_dir();
    for check in ["table1", "dyck", "primes"] {
        let out = natmat(
            &["oeis", "--check", check, "--bound", "4096"],
            &[("NATMAT_CACHE_DIR", dir.as_str())],
        );
        assert!(out.status.success(), "oeis {check} failed: {out:?}");
    }
}

#[test]
fn identical_seeds_are_byte_identical_across_thread_counts() {
    let census_args = ["census", "--from", "1", "--to", "10", "--seed", "7", "--format", "csv"];
    let single = natmat(&census_args, &[("RAYON_NUM_THREADS", "1")]);
    let many = natmat(&census_args, &[("RAYON_NUM_THREADS", "8")]);
    assert_eq!(single.stdout, many.stdout);

    let lp_args = [
        "least-prime", "--from", "30", "--to", "40", "--seed", "7", "--format", "csv",
    ];
    let single = natmat(&lp_args, &[("RAYON_NUM_THREADS", "1")]);
    let many = natmat(&lp_args, &[("RAYON_NUM_THREADS", "8")]);
    assert_eq!(single.stdout, many.stdout);
    let again = natmat(&lp_args, &[("RAYON_NUM_THREADS", "8")]);
    assert_eq!(again.stdout, many.stdout);
}

#[test]
fn exit_codes_follow_the_contract() {
    // 2: usage
    let out = natmat(&["census", "--from", "3", "--to", "1"], &[]);
    assert_eq!(out.status.code(), Some(2));
    let out = natmat(&["nonsense"], &[]);
    assert_eq!(out.status.code(), Some(2));
    let out = natmat(&["least-prime", "--from", "0", "--to", "1"], &[]);
    assert_eq!(out.status.code(), Some(2));

    // 3: resource limits
    let out = natmat(&["segment", "31"], &[]);
    assert_eq!(out.status.code(), Some(3));
    let out = natmat(
        &["census", "--from", "6", "--to", "6"],
        &[("NATMAT_CENSUS_CEILING", "5")],
    );
    assert_eq!(out.status.code(), Some(3));

    // 4: cache miss in cache-only mode
    let empty = tempfile::tempdir().unwrap();
    let out = natmat(
        &["oeis", "--check", "dyck"],
        &[("NATMAT_CACHE_DIR", empty.path().to_str().unwrap())],
    );
    assert_eq!(out.status.code(), Some(4));

    // 1: an honest mismatch against a corrupted cache
    let bad = tempfile::tempdir().unwrap();
    std::fs::write(bad.path().join("b036991.txt"), "1 0\n2 1\n3 4\n4 99999\n").unwrap();
    let out = natmat(
        &["oeis", "--check", "dyck", "--bound", "6"],
        &[("NATMAT_CACHE_DIR", bad.path().to_str().unwrap())],
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn census_allows_column_zero() {
    let out = stdout_of(&["census", "--from", "0", "--to", "0", "--format", "csv"]);
    assert_eq!(out.lines().nth(1), Some("0,0,1,0.000"));
}
