#![allow(dead_code)]

use solvlie::algebra::LieAlgebraSpec;
use solvlie::analysis::{analyze, Analysis, AnalysisOptions};
use solvlie::basis::{build_adaptable_basis, AdaptableBasis};

pub const VALID: [&str; 11] = [
    "ex",
    "ex2",
    "sec3-ex1",
    "sec3-ex2",
    "sec3-ex3",
    "sec5-ex3-repaired",
    "sec5-ex4-repaired",
    "free-nilpotent",
    "aniso-heisenberg",
    "sec5-ex7-repaired",
    "heisenberg-only",
];

pub fn spec(id: &str) -> LieAlgebraSpec {
    let path = format!("{}/../../corpus/{id}.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    LieAlgebraSpec::from_json(&text).unwrap()
}

pub fn basis(id: &str) -> AdaptableBasis {
    build_adaptable_basis(&spec(id)).unwrap()
}

pub fn analysis(id: &str) -> Analysis {
    analyze(&spec(id), &AnalysisOptions::default()).unwrap_or_else(|e| panic!("{id}: {e}"))
}
