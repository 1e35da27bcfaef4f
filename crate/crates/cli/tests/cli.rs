//! End-to-end checks of the CLI surface: exit codes, file formats, the
//! `inf`/`-inf` tokens, and byte-level determinism of CSV output.

use std::fs;
use std::process::{Command, Output};

fn geoskew(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geoskew"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn compute_prints_twelve_significant_digits() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.json");
    let q = dir.path().join("q.json");
    fs::write(&p, r#"{"weights": [0.5, 0.5]}"#).unwrap();
    fs::write(&q, r#"{"weights": [0.25, 0.75], "normalize": false}"#).unwrap();
    let out = geoskew(&[
        "compute",
        "--alpha",
        "1",
        "--lambda",
        "0.5",
        "--p",
        p.to_str().unwrap(),
        "--q",
        q.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "0.0719205181129\n");
}

#[test]
fn compute_lambda_zero_prints_zero() {
    let out = geoskew(&[
        "compute",
        "--alpha",
        "3",
        "--lambda",
        "0",
        "--p",
        "binomial:10:0.3",
        "--q",
        "binomial:10:0.7",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn compute_accepts_infinite_alpha_tokens() {
    for alpha in ["inf", "-inf"] {
        let out = geoskew(&[
            "compute",
            "--alpha",
            alpha,
            "--lambda",
            "0.5",
            "--p",
            "binomial:5:0.4",
            "--q",
            "binomial:5:0.6",
        ]);
        assert_eq!(exit_code(&out), 0, "alpha={alpha}");
    }
}

#[test]
fn zero_weight_is_domain_error_in_strict_mode_only() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("q.csv");
    fs::write(&q, "0\n1\n").unwrap();
    let base = [
        "compute",
        "--alpha",
        "1",
        "--lambda",
        "0.5",
        "--p",
        "binomial:1:0.5",
    ];
    let strict = geoskew(&[&base[..], &["--q", q.to_str().unwrap()]].concat());
    assert_eq!(exit_code(&strict), 3);
    let clamp = geoskew(&[&base[..], &["--q", q.to_str().unwrap(), "--mode", "clamp"]].concat());
    assert_eq!(exit_code(&clamp), 0);
}

#[test]
fn parse_and_io_failures_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "not-a-number\n").unwrap();
    let out = geoskew(&[
        "compute",
        "--alpha",
        "1",
        "--lambda",
        "0.5",
        "--p",
        bad.to_str().unwrap(),
        "--q",
        "binomial:1:0.5",
    ]);
    assert_eq!(exit_code(&out), 2);

    let out = geoskew(&[
        "compute",
        "--alpha",
        "1",
        "--lambda",
        "0.5",
        "--p",
        "/no/such/file",
        "--q",
        "binomial:1:0.5",
    ]);
    assert_eq!(exit_code(&out), 2);

    let bad_json = dir.path().join("bad.json");
    fs::write(&bad_json, r#"{"weights": "oops"}"#).unwrap();
    let out = geoskew(&[
        "compute",
        "--alpha",
        "1",
        "--lambda",
        "0.5",
        "--p",
        bad_json.to_str().unwrap(),
        "--q",
        "binomial:1:0.5",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn domain_failures_exit_three() {
    // length mismatch
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.csv");
    let q = dir.path().join("q.csv");
    fs::write(&p, "1\n1\n").unwrap();
    fs::write(&q, "1\n1\n1\n").unwrap();
    let out = geoskew(&[
        "compute",
        "--alpha",
        "0",
        "--lambda",
        "0.5",
        "--p",
        p.to_str().unwrap(),
        "--q",
        q.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 3);

    // mixing a density with a discrete vector
    let out = geoskew(&[
        "compute",
        "--alpha",
        "0",
        "--lambda",
        "0.5",
        "--p",
        "gaussian:0:1",
        "--q",
        "binomial:4:0.5",
    ]);
    assert_eq!(exit_code(&out), 3);

    // unnormalized weights declared as already normalized
    let raw = dir.path().join("raw.json");
    fs::write(&raw, r#"{"weights": [1, 3], "normalize": false}"#).unwrap();
    let out = geoskew(&[
        "compute",
        "--alpha",
        "0",
        "--lambda",
        "0.5",
        "--p",
        raw.to_str().unwrap(),
        "--q",
        "binomial:1:0.5",
    ]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn sweep_output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.csv");
    let second = dir.path().join("b.csv");
    for out_path in [&first, &second] {
        let out = geoskew(&[
            "sweep",
            "--alphas",
            "-1,0,1,3,inf",
            "--lambdas",
            "0,0.25,0.5,0.75,1",
            "--out",
            out_path.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0);
    }
    let a = fs::read(&first).unwrap();
    let b = fs::read(&second).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
    // LF endings, header first
    let text = String::from_utf8(a).unwrap();
    assert!(!text.contains('\r'));
    assert!(text.starts_with("alpha,lambda,divergence\n"));
    assert_eq!(text.lines().count(), 1 + 5 * 5);
}

#[test]
fn sweep_unwritable_output_exits_two() {
    let out = geoskew(&["sweep", "--out", "/no/such/dir/out.csv"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn gaussian_sweep_emits_expected_columns() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.csv");
    let out = geoskew(&[
        "gaussian-sweep",
        "--count",
        "2",
        "--alphas",
        "-1,1",
        "--lambdas",
        "0,0.5,1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "j,mu,var,alpha,lambda,divergence");
    assert_eq!(text.lines().count(), 1 + 2 * 2 * 3);
    // first data row is the reference against itself
    let first = text.lines().nth(1).unwrap();
    assert!(first.starts_with("1,0,0.5,-1,0,"));
}

#[test]
fn verify_reports_and_exits_zero() {
    let out = geoskew(&["verify", "--seed", "7", "--samples", "40"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("overall: pass"));
    assert!(text.contains("explore/alpha-3-identity"));
    assert!(text.contains("explore/subadditivity"));
}
