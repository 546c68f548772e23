use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tempfile::NamedTempFile;

use solvlie::analysis::AnalysisOptions;
use solvlie_cli::corpus::{self, Expectation, Source};

fn corpus_path(id: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", &format!("{id}.json")].iter().collect();
    p.to_string_lossy().into_owned()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn solvlie(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_solvlie")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn temp_spec(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

/// A corpus spec with the `corpus` block removed and `edit` applied.
fn edited(id: &str, edit: impl FnOnce(&mut Value)) -> NamedTempFile {
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(corpus_path(id)).unwrap()).unwrap();
    v.as_object_mut().unwrap().remove("corpus");
    edit(&mut v);
    temp_spec(&serde_json::to_string_pretty(&v).unwrap())
}

#[test]
fn validate_exit_codes() {
    let ok = solvlie(&["validate", &corpus_path("ex")]);
    assert_eq!(ok.code, 0, "{}", ok.stdout);
    assert!(ok.stdout.ends_with("PASS\n"));

    let jacobi = solvlie(&["validate", &corpus_path("sec5-ex3-verbatim")]);
    assert_eq!(jacobi.code, 2);
    assert!(jacobi.stdout.contains("JACOBI_FAIL"));

    let json = solvlie(&["validate", &corpus_path("sec5-ex3-verbatim"), "--format", "json"]);
    let v: Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["schema"], "solvlie-report/1");
    assert_eq!(v["passed"], false);
}

#[test]
fn empty_brackets_are_a_hypothesis_violation() {
    let f = edited("heisenberg-only", |v| v["brackets"] = Value::Array(vec![]));
    let r = solvlie(&["validate", path(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.contains("N_COMMUTATIVE"));
}

#[test]
fn parse_errors_carry_line_and_column() {
    let f = temp_spec("{\n  \"n_basis\": [\"X\",\n}");
    let r = solvlie(&["validate", path(&f)]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.starts_with(&format!("{}:3:1: PARSE_ERROR", path(&f))), "{}", r.stderr);

    let unknown = solvlie(&["validate", &corpus_path("sec5-ex7-verbatim")]);
    assert_eq!(unknown.code, 3);
    let text = std::fs::read_to_string(corpus_path("sec5-ex7-verbatim")).unwrap();
    let line = text.lines().position(|l| l.contains("\"A6\"")).unwrap() + 1;
    let col = text.lines().nth(line - 1).unwrap().find("\"A6\"").unwrap() + 1;
    assert!(unknown.stderr.contains(&format!(":{line}:{col}: UNKNOWN_LABEL")), "{}", unknown.stderr);

    assert_eq!(solvlie(&["validate", "/nonexistent/spec.json"]).code, 3);
}

#[test]
fn analyze_is_deterministic_per_seed() {
    let p = corpus_path("ex2");
    let a = solvlie(&["analyze", &p, "--format", "json"]);
    let b = solvlie(&["analyze", &p, "--format", "json", "--seed", "42", "--trials", "64"]);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["schema"], "solvlie-report/1");
    assert_eq!(v["options"]["seed"], 42);
    assert_eq!(v["admissibility"]["verdict"], "ADMISSIBLE");

    let other = solvlie(&["analyze", &p, "--format", "json", "--seed", "7"]);
    let w: Value = serde_json::from_str(&other.stdout).unwrap();
    assert_eq!(w["admissibility"]["verdict"], v["admissibility"]["verdict"]);
    assert_eq!(w["layer"]["g"]["layer"]["e"], v["layer"]["g"]["layer"]["e"]);
}

#[test]
fn analyze_failures() {
    let r = solvlie(&["analyze", &corpus_path("sec5-ex4-verbatim")]);
    assert_eq!(r.code, 2);

    // valid hypotheses, but the hint puts X before Z
    let f = edited("ex", |v| {
        let hint = v["adaptable_hint"].as_array_mut().unwrap();
        hint.reverse();
    });
    assert_eq!(solvlie(&["validate", path(&f)]).code, 0);
    let r = solvlie(&["analyze", path(&f)]);
    assert_eq!(r.code, 4);
    assert!(r.stderr.starts_with("HINT_INVALID"), "{}", r.stderr);
}

#[test]
fn admissible_exit_codes() {
    let yes = solvlie(&["admissible", &corpus_path("aniso-heisenberg")]);
    assert_eq!((yes.code, yes.stdout.as_str()), (0, "ADMISSIBLE (m=2)\n"));

    let no = solvlie(&["admissible", &corpus_path("ex")]);
    assert_eq!(no.code, 1);
    assert!(no.stdout.starts_with("NOT_ADMISSIBLE_CENTER_MEETS_H"));

    let uni = solvlie(&["admissible", &corpus_path("heisenberg-only"), "--format", "json"]);
    assert_eq!(uni.code, 1);
    let v: Value = serde_json::from_str(&uni.stdout).unwrap();
    assert_eq!(v["verdict"], "NOT_ADMISSIBLE_UNIMODULAR");
    assert_eq!(v["multiplicity"], "infinite");
    assert_eq!(v["flags"], Value::Array(vec![]));

    let invalid = solvlie(&["admissible", &corpus_path("sec5-ex3-verbatim")]);
    assert_eq!(invalid.code, 2);
    assert!(invalid.stdout.starts_with("INVALID HYPOTHESIS_VIOLATION"));
    assert_eq!(solvlie(&["admissible", &corpus_path("sec5-ex7-verbatim")]).code, 2);
}

#[test]
fn corpus_list_and_run() {
    let list = solvlie(&["corpus", "list", "--format", "json"]);
    let v: Value = serde_json::from_str(&list.stdout).unwrap();
    assert!(v.as_array().unwrap().len() >= 10);

    let all = solvlie(&["corpus", "run"]);
    assert_eq!(all.code, 0, "{}{}", all.stdout, all.stderr);
    assert!(all.stdout.ends_with(" 0 mismatches\n"));

    let one = solvlie(&["corpus", "run", "sec5-ex3-verbatim", "--format", "json"]);
    assert_eq!(one.code, 0);
    let v: Value = serde_json::from_str(&one.stdout).unwrap();
    let outcomes = v["outcomes"].as_array().unwrap();
    assert!(outcomes.iter().any(|o| o["observed"] == "JACOBI_FAIL"));
    assert!(outcomes.iter().all(|o| o["ok"] == true));

    assert_eq!(solvlie(&["corpus", "run", "no-such-entry"]).code, 2);
}

#[test]
fn a_wrong_expectation_is_reported() {
    let mut e = corpus::entry("ex").unwrap();
    e.expected = vec![Expectation {
        key: "verdict".into(),
        value: "ADMISSIBLE".into(),
        source: Source::Paper,
        anchor: "deliberately wrong".into(),
    }];
    let out = corpus::run_entry(&e, &AnalysisOptions::default());
    assert!(!out[0].ok);
    assert_eq!(out[0].observed, "NOT_ADMISSIBLE_CENTER_MEETS_H");
}
