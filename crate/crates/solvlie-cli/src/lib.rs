//! Command implementations behind the `solvlie` binary. Each command returns
//! its output and exit code instead of printing, so tests can drive it directly.

pub mod corpus;
pub mod report;

use std::fmt::Write;
use std::path::Path;

use serde_json::json;

use solvlie::algebra::{validate_spec, LieAlgebraSpec};
use solvlie::analysis::{analyze, AnalysisOptions};
use solvlie::Error;

use report::{validation_text, ReportDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_ADMISSIBLE: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_ANALYSIS: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    #[default]
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(code: i32, stdout: String) -> Self {
        Output { code, stdout, stderr: String::new() }
    }

    fn err(code: i32, stderr: String) -> Self {
        Output { code, stdout: String::new(), stderr }
    }
}

/// 1-based line and column of the first occurrence of `needle` in `text`.
fn locate(text: &str, needle: &str) -> Option<(usize, usize)> {
    let at = text.find(needle)?;
    let before = &text[..at];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Some((line, col))
}

/// Renders a parse failure, with a position whenever one can be recovered.
fn parse_failure(path: &str, text: &str, e: &Error) -> String {
    let pos = match e {
        Error::Parse { line, column, .. } => Some((*line, *column)),
        Error::UnknownLabel(l) | Error::DuplicateLabel(l) => locate(text, &format!("\"{l}\"")),
        Error::BadNumber(n) => locate(text, n),
        _ => None,
    };
    match pos {
        Some((l, c)) => format!("{path}:{l}:{c}: {}: {e}\n", e.code()),
        None => format!("{path}: {}: {e}\n", e.code()),
    }
}

enum Loaded {
    Spec(LieAlgebraSpec),
    Failed(Output),
}

fn load(path: &str) -> Loaded {
    let text = match std::fs::read_to_string(Path::new(path)) {
        Ok(t) => t,
        Err(e) => return Loaded::Failed(Output::err(EXIT_PARSE, format!("{path}: cannot read: {e}\n"))),
    };
    match LieAlgebraSpec::from_json(&text) {
        Ok(s) => Loaded::Spec(s),
        Err(e) => Loaded::Failed(Output::err(EXIT_PARSE, parse_failure(path, &text, &e))),
    }
}

pub fn validate(path: &str, format: Format) -> Output {
    let spec = match load(path) {
        Loaded::Spec(s) => s,
        Loaded::Failed(o) => return o,
    };
    let rep = validate_spec(&spec);
    let code = if rep.passed() { EXIT_OK } else { EXIT_HYPOTHESIS };
    let body = match format {
        Format::Json => {
            let doc =
                json!({ "schema": report::SCHEMA, "input": spec.name, "passed": rep.passed(), "validation": rep });
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        Format::Text => {
            let mut s = validation_text(&rep);
            let _ = writeln!(s, "{}", if rep.passed() { "PASS" } else { "HYPOTHESIS_VIOLATION" });
            s
        }
    };
    Output::ok(code, body)
}

pub fn analyze_cmd(path: &str, opts: &AnalysisOptions, format: Format) -> Output {
    let spec = match load(path) {
        Loaded::Spec(s) => s,
        Loaded::Failed(o) => return o,
    };
    let rep = validate_spec(&spec);
    if !rep.passed() {
        return Output {
            code: EXIT_HYPOTHESIS,
            stdout: validation_text(&rep),
            stderr: "HYPOTHESIS_VIOLATION\n".into(),
        };
    }
    match analyze(&spec, opts) {
        Ok(a) => {
            let doc = ReportDocument::new(&spec, a, *opts);
            Output::ok(EXIT_OK, if format == Format::Json { doc.to_json() + "\n" } else { doc.to_text() })
        }
        Err(e) => Output::err(EXIT_ANALYSIS, format!("{}: {e}\n", e.code())),
    }
}

pub fn admissible(path: &str, opts: &AnalysisOptions, format: Format) -> Output {
    let spec = match load(path) {
        Loaded::Spec(s) => s,
        Loaded::Failed(mut o) => {
            o.code = EXIT_INVALID;
            return o;
        }
    };
    let r = match analyze(&spec, opts) {
        Ok(a) => a.admissibility,
        Err(e) => {
            let out = match format {
                Format::Json => {
                    serde_json::to_string(&json!({ "verdict": "INVALID", "error": e.code() })).unwrap() + "\n"
                }
                Format::Text => format!("INVALID {}: {e}\n", e.code()),
            };
            return Output::ok(EXIT_INVALID, out);
        }
    };
    let code = if r.verdict.is_admissible() { EXIT_OK } else { EXIT_NOT_ADMISSIBLE };
    let out = match format {
        Format::Json => {
            serde_json::to_string(&json!({ "verdict": r.verdict, "multiplicity": r.multiplicity, "flags": r.flags }))
                .unwrap()
                + "\n"
        }
        Format::Text => {
            let mut s = format!("{} (m={})", r.verdict, r.multiplicity);
            for f in &r.flags {
                let _ = write!(s, " {f}");
            }
            s + "\n"
        }
    };
    Output::ok(code, out)
}

pub fn corpus_list(format: Format) -> Output {
    let entries = corpus::entries();
    let body = match format {
        Format::Json => {
            let v: Vec<_> = entries
                .iter()
                .map(|e| json!({ "id": e.id, "description": e.description, "errata_note": e.errata_note, "expected": e.expected }))
                .collect();
            serde_json::to_string_pretty(&v).unwrap() + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            for e in &entries {
                let _ = writeln!(s, "{:<20} {}", e.id, e.description);
                if e.errata_note.is_some() {
                    let _ = writeln!(s, "{:<20} (errata note attached)", "");
                }
            }
            s
        }
    };
    Output::ok(EXIT_OK, body)
}

pub fn corpus_run(id: Option<&str>, opts: &AnalysisOptions, format: Format) -> Output {
    let selected = match id {
        Some(id) => match corpus::entry(id) {
            Some(e) => vec![e],
            None => return Output::err(EXIT_INVALID, format!("unknown corpus entry `{id}`\n")),
        },
        None => corpus::entries(),
    };
    let outcomes = corpus::run(&selected, opts);
    let mut failed: Vec<&str> = outcomes.iter().filter(|o| !o.ok).map(|o| o.id.as_str()).collect();
    failed.dedup();
    let body = match format {
        Format::Json => {
            serde_json::to_string_pretty(&json!({ "outcomes": outcomes, "failed": failed })).unwrap() + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            for o in &outcomes {
                let _ = writeln!(
                    s,
                    "{:<4} {:<20} {:<22} [{}] expected {} observed {}",
                    if o.ok { "ok" } else { "FAIL" },
                    o.id,
                    o.key,
                    format!("{:?}", o.source).to_lowercase(),
                    o.expected,
                    o.observed
                );
                if !o.ok {
                    let _ = writeln!(s, "       contradicts: {}", o.anchor);
                }
            }
            for e in &selected {
                if let Some(n) = &e.errata_note {
                    let _ = writeln!(s, "note {}: {n}", e.id);
                }
            }
            let _ = writeln!(
                s,
                "{} expectations, {} mismatches",
                outcomes.len(),
                outcomes.iter().filter(|o| !o.ok).count()
            );
            s
        }
    };
    let mut out = Output::ok(if failed.is_empty() { EXIT_OK } else { 1 }, body);
    if !failed.is_empty() {
        out.stderr = format!("mismatch in: {}\n", failed.join(", "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn locate_counts_from_one() {
        assert_eq!(locate("ab\ncd \"X\"", "\"X\""), Some((2, 4)));
        assert_eq!(locate("\"X\"", "\"X\""), Some((1, 1)));
    }
}
