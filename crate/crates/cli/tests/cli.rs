//! End-to-end tests of the binary: exit codes, output fields, format
//! switches, and worker-count determinism.

use std::path::Path;
use std::process::{Command, Output};

fn betticone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_betticone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn betti_reports_row_one() {
    let out = betticone(&["betti", "2", "5", "3", "2", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("n = (7, 12, 13, 22)"), "{text}");
    assert!(text.contains("(1, 5, 6, 2)"), "{text}");
}

#[test]
fn betti_rejects_bad_parameters_with_exit_2() {
    let out = betticone(&["betti", "2", "3", "3", "2", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("alpha21"), "{err}");
}

#[test]
fn betti_verify_three_routes_agree_on_row_four() {
    let out = betticone(&["betti", "2", "5", "4", "2", "4", "--verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("(1, 6, 9, 4)").count(), 3, "{text}");
}

#[test]
fn betti_json_is_parseable() {
    let out = betticone(&["betti", "1", "4", "2", "2", "4", "--verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["n"], serde_json::json!([13, 12, 19, 11]));
    assert_eq!(value["formula_betti"], serde_json::json!([1, 5, 7, 3]));
    assert_eq!(value["resolution_betti"], serde_json::json!([1, 5, 7, 3]));
    assert_eq!(value["oracle_betti"], serde_json::json!([1, 5, 7, 3]));
}

#[test]
fn table1_reproduces_and_formats() {
    let out = betticone(&["table1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all 8 rows reproduce"));

    let out = betticone(&["table1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["reproduced"], serde_json::json!(true));
    assert_eq!(value["rows"].as_array().unwrap().len(), 8);

    let out = betticone(&["table1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 9);
}

#[test]
fn scan_csv_is_deterministic_across_worker_counts() {
    let dir = std::env::temp_dir();
    let one = dir.join("betticone_scan_jobs1.csv");
    let four = dir.join("betticone_scan_jobs4.csv");
    let out = betticone(&[
        "scan", "--max-alpha", "3", "--oracle", "--resolutions", "--jobs", "1", "--format",
        "csv", "--out", one.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = betticone(&[
        "scan", "--max-alpha", "3", "--oracle", "--resolutions", "--jobs", "4", "--format",
        "csv", "--out", four.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let a = std::fs::read(&one).unwrap();
    let b = std::fs::read(&four).unwrap();
    assert_eq!(a, b, "scan output must be byte-identical regardless of workers");
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("alpha21,alpha1,alpha2,alpha3,alpha4,n1,n2,n3,n4,mult_index,case"));
    assert!(text.lines().count() > 1);
    let _ = std::fs::remove_file(one);
    let _ = std::fs::remove_file(four);
}

#[test]
fn scan_rejects_overcap_ranges() {
    let out = betticone(&["scan", "--max-alpha", "99"]);
    assert_eq!(out.status.code(), Some(2));
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn audit_koszul_chain_is_exact() {
    let path = write_temp(
        "betticone_koszul.chain",
        "vars 3\n\
         matrix 1x3\n\
         x1; x2; x3\n\
         matrix 3x3\n\
         -x2; -x3; 0\n\
         x1; 0; -x3\n\
         0; x1; x2\n\
         matrix 3x1\n\
         x3\n\
         -x2\n\
         x1\n",
    );
    let out = betticone(&["audit", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("verdict: Exact"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn audit_flags_non_complexes_and_parse_errors() {
    let path = write_temp("betticone_noncomplex.chain", "vars 2\nmatrix 1x1\nx1\nmatrix 1x1\nx2\n");
    let out = betticone(&["audit", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("NotAComplex"));
    let _ = std::fs::remove_file(path);

    let path = write_temp("betticone_parse_error.chain", "vars 2\nmatrix 1x2\nx1\n");
    let out = betticone(&["audit", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line 3"), "{err}");
    let _ = std::fs::remove_file(path);

    let out = betticone(&["audit", "/definitely/not/a/file.chain"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn audit_round_trips_a_built_resolution() {
    use betticone_core::komeda::KomedaParams;
    use betticone_core::resolution::{build_resolution, serialize_chain};
    let p = KomedaParams::new(2, 4, 4, 2, 5).unwrap();
    let res = build_resolution(&p, p.classify().unwrap()).unwrap();
    let text = serialize_chain(&res.as_chain());
    let path = write_temp("betticone_built.chain", &text);
    let out = betticone(&["audit", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["verdict"], serde_json::json!("Exact"));
    assert_eq!(value["map_ranks"], serde_json::json!([1, 4, 3]));
    let _ = std::fs::remove_file(path);
}

#[test]
fn outputs_land_in_files() {
    let path = std::env::temp_dir().join("betticone_out.json");
    let out = betticone(&[
        "betti", "3", "6", "3", "4", "6", "--format", "json", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(Path::new(&path).exists());
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["case"], serde_json::json!("n3_lt"));
    let _ = std::fs::remove_file(path);
}
