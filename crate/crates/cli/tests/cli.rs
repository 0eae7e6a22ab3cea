use std::process::{Command, Output};

use bms_core::exactnum::Poly;
use bms_core::freefield::ResidualReport;
use bms_core::verma::{DeterminantCheck, GramReport};
use serde::Deserialize;

fn bms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bms"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

#[test]
fn partition_count() {
    let out = bms(&["partition", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "6\n");
    let out = bms(&["partition", "--n", "3/2", "--list"]);
    assert_eq!(stdout(&out), "3\nQ[-1/2]M[-1]\nQ[-3/2]\nQ[-1/2]L[-1]\n");
}

#[test]
fn gram_json_has_the_level_two_diagonal() {
    let out = bms(&["gram", "--level", "2", "--symbolic", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: GramReport = serde_json::from_str(&stdout(&out)).unwrap();
    let expected = [
        "8*h2^2",
        "4*h2 + 1/2*c2",
        "4*h2^2",
        // 2 h2 (2 h2 + 2/3 c2)
        "4*h2^2 + 4/3*h2*c2",
        "4*h2 + 1/2*c2",
        "8*h2^2",
    ];
    let expected: Vec<Poly> = expected.iter().map(|s| p(s)).collect();
    assert_eq!(report.diagonal, expected);
    for (a, row) in report.dmat.iter().enumerate() {
        assert!(row[a + 1..].iter().all(Poly::is_zero));
    }
    // re-serializing reproduces the output
    let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
    assert_eq!(again, stdout(&out));
}

#[test]
fn gram_csv_has_one_row_per_basis_element() {
    let out = bms(&["gram", "--level", "1", "--symbolic", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "basis,M[-1],L[-1]\nM[-1],2*h2,0\nL[-1],2*h1,2*h2\n"
    );
    let out = bms(&[
        "gram", "--level", "1", "--h1", "-1/2", "--h2", "3", "--c1", "0", "--c2", "1", "--matrix",
        "gram", "--format", "csv",
    ]);
    assert_eq!(stdout(&out), "basis,M[-1],L[-1]\nM[-1],0,6\nL[-1],6,-1\n");
}

#[test]
fn ffr_verify_succeeds() {
    let out = bms(&[
        "ffr-verify",
        "--max-mode",
        "3",
        "--max-depth",
        "4",
        "--rho",
        "symbolic",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));

    #[derive(Deserialize)]
    struct Report {
        central: [Poly; 2],
        pairs: Vec<ResidualReport>,
        passed: bool,
    }
    let report: Report = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.passed);
    assert!(report.pairs.iter().all(ResidualReport::passed));
    assert_eq!(report.central, [p("5/2"), p("-12*rho^2")]);
    // generators with |mode| <= 3: 7 L, 7 M, 6 Q
    assert_eq!(report.pairs.len(), 20 * 21 / 2);

    let out = bms(&[
        "ffr-verify",
        "--max-mode",
        "2",
        "--max-depth",
        "2",
        "--spec",
        "whittaker",
        "--rho",
        "-1/2",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn detcheck_is_deterministic() {
    let args = [
        "detcheck", "--level", "3/2", "--trials", "3", "--seed", "7", "--format", "json",
    ];
    let first = bms(&args);
    let second = bms(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    #[derive(Deserialize)]
    struct Report {
        seed: Option<u64>,
        checks: Vec<DeterminantCheck>,
    }
    let report: Report = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(report.seed, Some(7));
    assert_eq!(report.checks.len(), 4 * 3);
    assert!(report.checks.iter().all(DeterminantCheck::agrees));

    let other = bms(&[
        "detcheck", "--level", "3/2", "--trials", "3", "--seed", "8", "--format", "json",
    ]);
    assert_ne!(first.stdout, other.stdout);
}

#[test]
fn simplicity_reports() {
    let out = bms(&["simplicity", "--h2", "-1", "--c2", "8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["simple"], false);
    assert_eq!(v["verma"]["all_roots"], serde_json::json!([2]));
    assert_eq!(v["first_degenerate_level"], "2");

    let out = bms(&["simplicity", "--kind", "fock", "--b", "3", "--rho", "0"]);
    assert!(stdout(&out).contains(": simple"));
    let out = bms(&[
        "simplicity",
        "--kind",
        "bms-whittaker",
        "--k",
        "2",
        "--phi",
        "M[4]=0,M[3]=0",
    ]);
    assert!(stdout(&out).contains("not simple"));
    let out = bms(&["simplicity", "--kind", "bms-whittaker", "--k", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn singular_vectors_at_the_vacuum() {
    let out = bms(&[
        "singular", "--level", "1/2", "--h1", "0", "--h2", "0", "--c1", "3/2", "--c2", "-2",
        "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Q[-1/2]\n1\n");
    let out = bms(&["singular", "--level", "1", "--symbolic"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_one() {
    for args in [
        vec!["partition", "--n", "3/4"],
        vec!["partition", "--n", "2", "--bogus"],
        vec!["gram", "--level", "x"],
        vec!["gram", "--level", "1", "--h1", "1/0"],
        vec!["gram", "--level", "1", "--symbolic", "--h1", "1"],
        vec!["frobnicate"],
    ] {
        let out = bms(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(bms(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("bms-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("whittaker.json");
    let out = bms(&[
        "whittaker",
        "--max-mode",
        "3",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["actions"][1]["generator"], "L[2]");
    std::fs::remove_dir_all(&dir).unwrap();
}
