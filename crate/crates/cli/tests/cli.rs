use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use symplectic_qec_cli::commands::{analyze, AnalyzeOutput};
use symplectic_qec_cli::{exit, parse_code_file, render};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgsop"))
        .args(args)
        .output()
        .expect("spawn sgsop")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn run_on(sub: &str, file: &str, extra: &[&str]) -> Output {
    let path = fixture(file);
    let mut args = vec![sub, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

#[test]
fn analyze_json_matches_goldens() {
    for (file, gold) in [
        ("steane.css", "steane_css.analyze.json"),
        ("five_qubit.pauli", "five_qubit_pauli.analyze.json"),
        ("ea_c1.css", "ea_c1_css.analyze.json"),
        ("five_qubit.crss", "five_qubit_crss.analyze.json"),
    ] {
        let first = run_on("analyze", file, &["--format", "json"]);
        let second = run_on("analyze", file, &["--format", "json"]);
        assert_eq!(first.status.code(), Some(exit::OK), "{file}");
        assert_eq!(
            first.stdout, second.stdout,
            "{file}: output differs between runs"
        );
        assert_eq!(stdout(&first), golden(gold), "{file}: golden mismatch");
    }
}

#[test]
fn sgsop_json_matches_golden() {
    let out = run_on(
        "sgsop",
        "five_qubit_normalizer.pauli",
        &["--format", "json"],
    );
    assert_eq!(out.status.code(), Some(exit::OK));
    assert_eq!(stdout(&out), golden("five_qubit_normalizer.sgsop.json"));
}

#[test]
fn analyze_json_round_trips() {
    let out = run_on("analyze", "steane.css", &["--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["all_checks_pass"], true);
    let r = &v["report"];
    assert_eq!(r["kind"], "css");
    assert_eq!(
        (r["n"].as_u64(), r["k"].as_i64(), r["c"].as_u64()),
        (Some(7), Some(1), Some(0))
    );
    assert_eq!(r["i"], 6);
    assert_eq!(r["entanglement_assisted"], false);
    assert_eq!(r["logical_pairs"].as_array().unwrap().len(), 1);
    assert!(r["formula_checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|f| f["agree"] == true && f["lhs"] == f["rhs"]));

    // Typed round trip: the document deserialises to the in-process result
    // and serialises back to the same bytes.
    let typed: AnalyzeOutput = serde_json::from_slice(&out.stdout).unwrap();
    let src = std::fs::read_to_string(fixture("steane.css")).unwrap();
    let direct = analyze(&parse_code_file(&src).unwrap()).unwrap();
    assert_eq!(typed, direct);
    assert_eq!(render::json(&typed), stdout(&out));
}

#[test]
fn ea_css_reports_one_ebit() {
    let out = run_on("analyze", "ea_c1.css", &["--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["report"]["c"], 1);
    assert_eq!(v["report"]["k"], 1);
    assert_eq!(v["report"]["entanglement_assisted"], true);
    assert_eq!(v["report"]["entanglement_pairs"][0][0], "ZI");
}

#[test]
fn sgsop_text_and_reverse() {
    let out = run_on("sgsop", "xz.pauli", &[]);
    assert_eq!(out.status.code(), Some(exit::OK));
    let text = stdout(&out);
    assert!(text.contains("pair 1: X | Z"), "{text}");
    assert!(text.contains("1 pairs, 0 isotropic"), "{text}");

    let out = run_on(
        "sgsop",
        "five_qubit_normalizer.pauli",
        &["--reverse", "--format", "json"],
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["round_trip"], true);
    assert_eq!(v["replay"], v["input"]);
}

#[test]
fn sgsop_on_commuting_and_empty_sets() {
    let out = run_on("sgsop", "commuting.pauli", &["--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["decomposition"]["pairs"].as_array().unwrap().len(), 0);
    assert_eq!(v["decomposition"]["isotropic"], v["input"]);

    let out = run_on("sgsop", "empty.pauli", &["--format", "json"]);
    assert_eq!(out.status.code(), Some(exit::OK));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["decomposition"]["log"].as_array().unwrap().len(), 0);
}

#[test]
fn entanglement_methods_agree() {
    for (file, c) in [
        ("steane.css", 0),
        ("ea_c1.css", 1),
        ("five_qubit.crss", 0),
        ("ea_c1.crss", 1),
    ] {
        let out = run_on(
            "entanglement",
            file,
            &["--format", "json", "--repeats", "3"],
        );
        assert_eq!(out.status.code(), Some(exit::OK), "{file}");
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["agree"], true, "{file}");
        assert_eq!(v["sgsop_c"], c, "{file}");
        let methods = v["methods"].as_array().unwrap();
        assert_eq!(methods.len(), 2);
        for m in methods {
            assert_eq!(m["c"], c, "{file}");
            assert_eq!(m["repeats"], 3);
            assert!(m["median_us"].as_f64().unwrap() >= 0.0);
        }
    }
    let out = run_on(
        "entanglement",
        "ea_c1.crss",
        &["--method", "h", "--format", "json"],
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["methods"].as_array().unwrap().len(), 1);
    assert_eq!(v["methods"][0]["method"], "H");
}

#[test]
fn verify_fixture_files_pass() {
    for file in [
        "steane.css",
        "five_qubit.pauli",
        "ea_c1.css",
        "five_qubit.crss",
        "ea_c1.crss",
    ] {
        let out = run_on("verify", file, &[]);
        assert_eq!(
            out.status.code(),
            Some(exit::OK),
            "{file}: {}",
            stdout(&out)
        );
    }
    let dump = std::env::temp_dir().join(format!("sgsop-dump-{}.json", std::process::id()));
    let out = run_on("sgsop", "five_qubit.pauli", &["--format", "json"]);
    std::fs::write(&dump, &out.stdout).unwrap();
    let res = run(&["verify", dump.to_str().unwrap()]);
    std::fs::remove_file(&dump).unwrap();
    assert_eq!(res.status.code(), Some(exit::OK), "{}", stdout(&res));
}

#[test]
fn verify_random_is_deterministic() {
    let a = run(&["verify", "--random", "6", "20", "7", "--format", "json"]);
    let b = run(&[
        "verify", "--random", "6", "20", "--seed", "7", "--format", "json",
    ]);
    assert_eq!(a.status.code(), Some(exit::OK), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["trials"], 20);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn tampered_dump_names_the_broken_pair() {
    let out = run_on("verify", "tampered_pair.sgsop.json", &[]);
    assert_eq!(out.status.code(), Some(exit::CHECK_FAILED));
    let text = stdout(&out);
    assert!(text.contains("failed: pairs anticommute"), "{text}");
    assert!(text.contains("verification FAILED"));
}

#[test]
fn incomplete_normalizer_fails_span_check() {
    let out = run_on(
        "analyze",
        "incomplete_normalizer.pauli",
        &["--format", "json"],
    );
    assert_eq!(out.status.code(), Some(exit::CHECK_FAILED));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["all_checks_pass"], false);
    let failed: Vec<&str> = v["report"]["formula_checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|f| f["agree"] == false)
        .map(|f| f["name"].as_str().unwrap())
        .collect();
    assert!(
        failed.contains(&"span(S_I from S) = span(S_I from N(S))"),
        "{failed:?}"
    );
}

#[test]
fn invalid_code_is_a_validation_error() {
    let out = run_on("analyze", "bad_h.css", &[]);
    assert_eq!(out.status.code(), Some(exit::VALIDATION));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("H1·G1^T != 0"), "{err}");
}

#[test]
fn bad_letter_reports_line_and_column() {
    let out = run_on("analyze", "bad_letter.pauli", &[]);
    assert_eq!(out.status.code(), Some(exit::PARSE));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2") && err.contains("column 3"), "{err}");
}

#[test]
fn io_and_usage_errors() {
    let out = run(&["analyze", "/nonexistent/code.css"]);
    assert_eq!(out.status.code(), Some(exit::IO));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "--random", "4"]);
    assert_eq!(out.status.code(), Some(2));
    // sgsop needs a Pauli file.
    let out = run_on("sgsop", "steane.css", &[]);
    assert_ne!(out.status.code(), Some(exit::OK));
}
