use std::process::{Command, Output};

use ice_colors::cli::{main_with_args, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ice-colors"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn in_process(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ice-colors").chain(args.iter().copied());
    let code = main_with_args(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn pn_n1_exact_json() {
    let (code, out, _) = in_process(&["pn", "--n", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.starts_with(r#"{"n":1,"degree":0,"coeffs":["1"],"#),
        "{out}"
    );
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["symmetry_ok"], true);
    assert_eq!(v["negative_coeffs"], serde_json::json!([]));
}

#[test]
fn pn_n3_coefficients() {
    let (code, out, _) = in_process(&["pn", "--n", "3"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["coeffs"],
        serde_json::json!(["1", "2", "7", "10", "21", "12", "11"])
    );
}

#[test]
fn counts_n1_records() {
    let (code, out, _) = in_process(&["counts", "--n", "1"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v,
        serde_json::json!([
            {"m": 0, "l": 2, "k0": 3, "k1": 2, "k2": 1, "count": 1},
            {"m": 1, "l": 1, "k0": 3, "k1": 1, "k2": 2, "count": 1}
        ])
    );
    let (_, csv, _) = in_process(&["counts", "--n", "1", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("m,l,k0,k1,k2,count"));
    assert_eq!(csv.lines().count(), 3);
}

#[test]
fn counts_written_to_file() {
    let path = std::env::temp_dir().join(format!("ice-colors-counts-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, _, _) = in_process(&["counts", "--n", "2", "--output", p]);
    assert_eq!(code, EXIT_OK);
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let table = ice_colors::lattice::CountTable::from_json(2, &text).unwrap();
    assert_eq!(table.total(), 12);
}

#[test]
fn enumerate_reports_totals() {
    let (code, out, _) = in_process(&["enumerate", "--n", "3"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["states"], 208);
    assert_eq!(v["states_by_m"][0], 26);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(in_process(&["verify", "--suite", "bogus"]).0, EXIT_USAGE);
    assert_eq!(
        in_process(&["verify", "--suite", "theta", "--trials", "0"]).0,
        EXIT_USAGE
    );
    assert_eq!(in_process(&["nonsense"]).0, EXIT_USAGE);
    assert_eq!(in_process(&["pn", "--n", "0"]).0, EXIT_USAGE);
}

#[test]
fn expired_budget_fails() {
    let (code, _, _) = in_process(&[
        "--budget-secs",
        "0",
        "verify",
        "--suite",
        "filali",
        "--trials",
        "2",
    ]);
    assert_eq!(code, EXIT_CHECK_FAILED);
}

#[test]
fn verify_is_byte_identical_across_runs_and_threads() {
    let args = [
        "verify", "--suite", "filali", "--trials", "20", "--seed", "7",
    ];
    let first = bin(&args);
    let second = bin(&args);
    let single = Command::new(env!("CARGO_BIN_EXE_ice-colors"))
        .args(args)
        .env("ICE_COLORS_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(first.status.code(), Some(EXIT_OK));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, single.stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["seed"], 7);
}

#[test]
fn lattice_suite_passes() {
    let out = bin(&["verify", "--suite", "lattice", "--n", "3"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
}
