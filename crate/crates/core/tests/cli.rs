use std::process::{Command, Output};

use confspace::cli::PolyRow;
use confspace::LaurentPoly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_confspace")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn pyramidal_csv() {
    let csv = stdout(&["table", "pyramidal", "--max-k", "3", "--max-i", "4", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[4], "2,1,3,6,10,15");
}

#[test]
fn pyramidal_latex() {
    let tex = stdout(&["table", "pyramidal", "--max-k", "3", "--max-i", "4", "--format", "latex"]);
    assert!(tex.starts_with("\\begin{tabular}{c|ccccc}\n"));
    assert!(tex.contains("\n-1 & 1 & 0 & 0 & 0 & 0 \\\\\n"));
    assert!(tex.contains("\n3 & 1 & 4 & 10 & 20 & 35 \\\\\n"));
}

#[test]
fn betti_json_last_row() {
    let json = stdout(&["table", "betti", "--space", "unordered", "--kind", "standard", "-k", "2", "--max-n", "3", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[3]["k"], 2);
    assert_eq!(rows[3]["n"], 3);
    assert_eq!(rows[3]["ranks"], serde_json::json!(["1", "3", "5", "4"]));
}

#[test]
fn json_round_trips_to_canonical_strings() {
    for (space, kind) in [("unordered", "standard"), ("ordered", "standard"), ("unordered", "virtual"), ("ordered", "virtual")] {
        let json = stdout(&["table", "betti", "--space", space, "--kind", kind, "-k", "3", "--max-n", "9", "--format", "json"]);
        let rows: Vec<PolyRow> = serde_json::from_str(&json).unwrap();
        for row in rows {
            assert_eq!(row.to_poly().unwrap().to_string(), row.poly);
            assert_eq!(row.poly.parse::<LaurentPoly>().unwrap().to_string(), row.poly);
        }
    }
}

#[test]
fn virtual_ordered_n0_is_one() {
    let csv = stdout(&["table", "betti", "--space", "ordered", "--kind", "virtual", "-k", "2", "--max-n", "0"]);
    assert_eq!(csv, "k,n,poly,c0\n2,0,1,1\n");
}

#[test]
fn betti_latex_and_csv() {
    let tex = stdout(&["table", "betti", "--kind", "virtual", "--space", "unordered", "-k", "2", "--max-n", "3", "--format", "latex"]);
    assert!(tex.contains("2 & 3 & $x^{6}-3x^{4}+5x^{2}-4$ \\\\"));
    let csv = stdout(&["table", "betti", "--space", "ordered", "-k", "2", "--max-n", "3"]);
    assert_eq!(csv.lines().last().unwrap(), "2,3,24x^3+26x^2+9x+1,1,9,26,24");
}

#[test]
fn series_lines() {
    assert_eq!(stdout(&["series", "--family", "standard-unordered", "-k", "0", "--order", "3"]), "1\n1\nx+1\nx+1\n");
    let v = stdout(&["series", "--family", "virtual-unordered", "-k", "2", "--order", "3"]);
    assert_eq!(v.lines().last().unwrap(), "x^6-3x^4+5x^2-4");
    assert_eq!(stdout(&["series", "--family", "virtual-unordered", "-k", "0", "--order", "0"]), "1\n");
    let raw = stdout(&["series", "--family", "virtual-unordered-raw", "-k", "4", "--order", "10"]);
    assert_eq!(raw, stdout(&["series", "--family", "virtual-unordered", "-k", "4", "--order", "10"]));
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "betti", "--kind", "virtual", "-k", "5", "--max-n", "20", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["verify", "--suite", "duality"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn verify_duality_lists_every_pair() {
    let out = stdout(&["verify", "duality", "-k", "2", "--max-n", "8", "--space", "both"]);
    for space in ["ordered", "unordered"] {
        for n in 0..=8 {
            assert!(out.contains(&format!("PASS space={space} k=2 n={n}\n")), "{space} {n}");
        }
    }
    assert!(out.ends_with("PASS\n"));
}

#[test]
fn verify_pointcount_prints_table() {
    let out = stdout(&["verify", "pointcount", "--primes", "2,3,5,7", "--max-k", "3", "--max-n", "5"]);
    assert!(out.contains("  5   2   3 unordered           71           71 true"), "{out}");
    assert!(!out.contains("false"));
}

#[test]
fn verify_suites_pass() {
    for suite in ["recursions", "series", "duality", "euler", "pointcount", "all"] {
        let out = run(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
    }
}

#[test]
fn injected_fault_fails_with_location() {
    let out = run(&["verify", "--suite", "duality", "--inject", "standard-unordered:3:4:2:1"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL space=unordered k=3 n=4"));
    assert!(text.lines().last().unwrap().contains("space=unordered k=3 n=4"));
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["table", "pyramidal", "--max-k", "-2", "--max-i", "4"],
        &["table", "pyramidal", "--max-k", "33", "--max-i", "4"],
        &["table", "betti", "-k", "33", "--max-n", "3"],
        &["table", "betti", "-k", "2", "--max-n", "65"],
        &["table", "bogus"],
        &["series", "--family", "standard-unordered", "-k", "1", "--order", "65"],
        &["verify", "--suite", "nope"],
        &["verify", "--primes", "4"],
        &["verify", "duality", "--suite", "euler"],
        &["verify", "--inject", "bad"],
    ];
    for args in cases {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    // Out of the enumeration budget.
    assert_eq!(run(&["verify", "pointcount", "--primes", "97", "--max-n", "5"]).status.code(), Some(2));
}

#[test]
fn pyramidal_accepts_k_minus_one() {
    assert_eq!(stdout(&["table", "pyramidal", "--max-k", "-1", "--max-i", "2"]), "k,0,1,2\n-1,1,0,0\n");
}
