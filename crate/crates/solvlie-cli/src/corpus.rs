//! The bundled example corpus and the expected-versus-computed runner.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use solvlie::algebra::{validate_spec, LieAlgebraSpec};
use solvlie::analysis::{analyze, Analysis, AnalysisOptions};
use solvlie::arith::parse_rational;

macro_rules! corpus_files {
    ($($id:literal),* $(,)?) => {
        &[$(($id, include_str!(concat!("../../../corpus/", $id, ".json")))),*]
    };
}

/// `(id, file contents)`, in display order.
pub const FILES: &[(&str, &str)] = corpus_files![
    "sec3-ex1",
    "sec3-ex2",
    "sec3-ex3",
    "ex",
    "ex2",
    "sec5-ex3-verbatim",
    "sec5-ex3-repaired",
    "sec5-ex4-verbatim",
    "sec5-ex4-repaired",
    "free-nilpotent",
    "aniso-heisenberg",
    "sec5-ex7-verbatim",
    "sec5-ex7-repaired",
    "heisenberg-only",
    "abelian",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Paper,
    Derived,
    Trivial,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Expectation {
    pub key: String,
    pub value: Value,
    pub source: Source,
    pub anchor: String,
}

#[derive(Clone, Debug, Deserialize)]
struct Meta {
    id: String,
    description: String,
    errata_note: Option<String>,
    expected: Vec<Expectation>,
}

#[derive(Deserialize)]
struct File {
    corpus: Meta,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub description: String,
    pub errata_note: Option<String>,
    pub expected: Vec<Expectation>,
    pub text: &'static str,
}

impl CorpusEntry {
    pub fn spec(&self) -> solvlie::Result<LieAlgebraSpec> {
        LieAlgebraSpec::from_json(self.text)
    }
}

pub fn entries() -> Vec<CorpusEntry> {
    FILES
        .iter()
        .map(|(id, text)| {
            let f: File = serde_json::from_str(text).unwrap_or_else(|e| panic!("corpus/{id}.json: {e}"));
            assert_eq!(f.corpus.id, *id);
            CorpusEntry {
                id: f.corpus.id,
                description: f.corpus.description,
                errata_note: f.corpus.errata_note,
                expected: f.corpus.expected,
                text,
            }
        })
        .collect()
}

pub fn entry(id: &str) -> Option<CorpusEntry> {
    entries().into_iter().find(|e| e.id == id)
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: String,
    pub key: String,
    pub source: Source,
    pub anchor: String,
    pub expected: Value,
    pub observed: Value,
    pub ok: bool,
}

/// What the pipeline says about one entry; both stages may fail.
struct Observed {
    spec: solvlie::Result<LieAlgebraSpec>,
    analysis: Option<solvlie::Result<Analysis>>,
}

fn observe(entry: &CorpusEntry, opts: &AnalysisOptions) -> Observed {
    let spec = entry.spec();
    let needs_analysis =
        entry.expected.iter().any(|e| !e.key.starts_with("validation") && !e.key.starts_with("center"));
    let analysis = match (&spec, needs_analysis) {
        (Ok(s), true) => Some(analyze(s, opts)),
        _ => None,
    };
    Observed { spec, analysis }
}

fn center_contains(spec: &LieAlgebraSpec, want: &Value) -> Option<bool> {
    let c = solvlie::admissibility::center_data(spec);
    for v in want.as_array()? {
        let mut w = vec![solvlie::Rational::from_integer(0.into()); spec.dim()];
        for (label, coeff) in v.as_object()? {
            w[spec.index_of(label)?] = parse_rational(coeff.as_str()?).ok()?;
        }
        if !c.z_g.contains(&w) {
            return Some(false);
        }
    }
    Some(true)
}

fn value_of(obs: &Observed, exp: &Expectation) -> (Value, Option<bool>) {
    let spec = match &obs.spec {
        Ok(s) => s,
        Err(e) => return (json!(e.code()), None),
    };
    let validation = validate_spec(spec);
    match exp.key.as_str() {
        "validation" => {
            let v = validation.failures().next().and_then(|c| c.code).unwrap_or("PASS");
            return (json!(v), None);
        }
        "validation_witness" => {
            return (json!(validation.failures().next().map(|c| c.witness.clone()).unwrap_or_default()), None)
        }
        "center_contains" => {
            let c = solvlie::admissibility::center_data(spec);
            let labels = spec.labels();
            let shown: Vec<String> = c
                .z_g
                .basis()
                .iter()
                .map(|v| {
                    solvlie::basis::format_combo(&v.iter().cloned().map(solvlie::GR::real).collect::<Vec<_>>(), &labels)
                })
                .collect();
            return (json!(shown), center_contains(spec, &exp.value));
        }
        "center_dim" => return (json!(solvlie::admissibility::center_data(spec).z_g.dim()), None),
        "center_cap_h_dim" => return (json!(solvlie::admissibility::center_data(spec).dim_z_cap_h()), None),
        _ => {}
    }
    let a = match obs.analysis.as_ref() {
        Some(Ok(a)) => a,
        Some(Err(e)) => return (json!(e.code()), None),
        None => return (json!("NOT_RUN"), None),
    };
    let r = &a.admissibility;
    let v = match exp.key.as_str() {
        "nu" => json!(a.stabilizer.nu),
        "e_circ" => json!(a.n_layer.layer.e),
        "g_e" => json!(a.g_layer.layer.e),
        "g_j" => {
            let mut j = a.g_layer.layer.j.clone();
            j.sort_unstable();
            json!(j)
        }
        "phi" => json!(a.g_layer.layer.phi),
        "k_cases" => json!(a.g_layer.layer.cases),
        "lambda_printable" => json!(a.sections.lambda.printable_form),
        "lambda_nu_printable" => json!(a.sections.lambda_nu.printable_form),
        "sigma_circ_printable" => json!(a.sections.sigma_circ.printable_form),
        "sigma_printable" => json!(a.sections.sigma.printable_form),
        "k_dim" => json!(r.k_dim),
        "dim_x" => json!(r.dim_x),
        "unimodular" => json!(r.unimodular),
        "trace" => Value::Object(r.trace_table.iter().map(|t| (t.element.clone(), json!(t.trace))).collect()),
        "multiplicity" => serde_json::to_value(r.multiplicity).expect("serializable"),
        "verdict" => json!(r.verdict.code()),
        other => json!(format!("UNKNOWN_KEY {other}")),
    };
    (v, None)
}

/// Runs every expectation of `entry`.
pub fn run_entry(entry: &CorpusEntry, opts: &AnalysisOptions) -> Vec<Outcome> {
    let obs = observe(entry, opts);
    entry
        .expected
        .iter()
        .map(|exp| {
            let (observed, verdict) = value_of(&obs, exp);
            Outcome {
                id: entry.id.clone(),
                key: exp.key.clone(),
                source: exp.source,
                anchor: exp.anchor.clone(),
                ok: verdict.unwrap_or(observed == exp.value),
                expected: exp.value.clone(),
                observed,
            }
        })
        .collect()
}

/// Runs the selected entries on separate threads.
pub fn run(entries: &[CorpusEntry], opts: &AnalysisOptions) -> Vec<Outcome> {
    std::thread::scope(|s| {
        let handles: Vec<_> = entries.iter().map(|e| s.spawn(move || run_entry(e, opts))).collect();
        handles.into_iter().flat_map(|h| h.join().expect("corpus worker panicked")).collect()
    })
}
