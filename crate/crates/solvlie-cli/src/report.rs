//! The versioned report document and its text rendering.

use std::fmt::Write;

use serde::Serialize;

use solvlie::admissibility::AdmissibilityReport;
use solvlie::algebra::{LieAlgebraSpec, Status, ValidationReport};
use solvlie::analysis::{Analysis, AnalysisOptions, Sections};
use solvlie::arith::{Rational, GR};
use solvlie::basis::format_combo;
use solvlie::stratification::GenericLayer;

pub const SCHEMA: &str = "solvlie-report/1";

#[derive(Serialize)]
pub struct Input {
    pub name: String,
    pub n_basis: Vec<String>,
    pub h_basis: Vec<String>,
}

#[derive(Serialize)]
pub struct BasisSummary {
    pub labels: Vec<String>,
    /// `σ`, 1-based.
    pub sigma: Vec<usize>,
    /// `γ_j(A_t)` rows for the `n` part.
    pub weights: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct Layers {
    pub n: GenericLayer,
    pub g: GenericLayer,
}

#[derive(Serialize)]
pub struct StabilizerSummary {
    pub nu: Vec<usize>,
    pub phi: Vec<usize>,
    pub k: Vec<String>,
    pub k_dim: usize,
    /// Normalized complement `A_t`.
    pub a: Vec<String>,
}

#[derive(Serialize)]
pub struct ReportDocument {
    pub schema: &'static str,
    pub input: Input,
    pub options: AnalysisOptions,
    pub validation: ValidationReport,
    pub basis: BasisSummary,
    pub layer: Layers,
    pub sections: Sections,
    pub stabilizer: StabilizerSummary,
    pub sigma_point: Vec<String>,
    pub admissibility: AdmissibilityReport,
}

fn h_combo(v: &[Rational], names: &[String]) -> String {
    format_combo(&v.iter().cloned().map(GR::real).collect::<Vec<_>>(), names)
}

impl ReportDocument {
    pub fn new(spec: &LieAlgebraSpec, a: Analysis, options: AnalysisOptions) -> Self {
        let b = &a.basis;
        let st = &a.stabilizer;
        ReportDocument {
            schema: SCHEMA,
            input: Input { name: spec.name.clone(), n_basis: spec.n_names.clone(), h_basis: spec.h_names.clone() },
            options,
            validation: a.validation,
            basis: BasisSummary {
                labels: b.labels[..b.n].to_vec(),
                sigma: b.sigma[..b.n].iter().map(|s| s + 1).collect(),
                weights: b.weights[..b.n].iter().map(|w| w.iter().map(|g| g.to_string()).collect()).collect(),
            },
            layer: Layers { n: a.n_layer, g: a.g_layer },
            sections: a.sections,
            stabilizer: StabilizerSummary {
                nu: st.nu.clone(),
                phi: st.phi.clone(),
                k: st.k.basis().iter().map(|v| h_combo(v, &b.h_names)).collect(),
                k_dim: st.k_dim(),
                a: st.normalized.iter().map(|v| h_combo(v, &b.h_names)).collect(),
            },
            sigma_point: a.sigma_point[..b.n].iter().map(|x| x.to_string()).collect(),
            admissibility: a.admissibility,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let r = &self.admissibility;
        let _ = writeln!(s, "{} ({})", self.input.name, self.schema);
        let _ =
            writeln!(s, "n = span{{{}}}, h = span{{{}}}", self.input.n_basis.join(", "), self.input.h_basis.join(", "));
        let _ = writeln!(s, "adaptable basis: {}", self.basis.labels.join(", "));
        let n = &self.layer.n.layer;
        let g = &self.layer.g.layer;
        let _ = writeln!(
            s,
            "generic layer of n*: e° = {:?}, j° = {:?} ({}/{} samples)",
            n.e, n.j, self.layer.n.agreeing, self.layer.n.trials
        );
        let _ = writeln!(
            s,
            "generic layer of g*: e = {:?}, j = {:?}, φ = {:?} ({}/{} samples)",
            g.e, g.j, g.phi, self.layer.g.agreeing, self.layer.g.trials
        );
        let _ = writeln!(s, "ν = {:?}", self.stabilizer.nu);
        for (name, o) in [
            ("Λ", &self.sections.lambda),
            ("Λ_ν", &self.sections.lambda_nu),
            ("Σ°", &self.sections.sigma_circ),
            ("Σ", &self.sections.sigma),
        ] {
            let form = o.printable_form.clone().unwrap_or_else(|| format!("{} constraints", o.constraints.len()));
            let _ = writeln!(s, "{name}: {form}");
        }
        let _ = writeln!(s, "k = span{{{}}} (dim {})", self.stabilizer.k.join(", "), self.stabilizer.k_dim);
        let traces: Vec<String> = r.trace_table.iter().map(|t| format!("tr ad {} = {}", t.element, t.trace)).collect();
        let _ = writeln!(s, "{}; unimodular: {}", traces.join(", "), r.unimodular);
        let _ =
            writeln!(s, "center: span{{{}}}; center ∩ h: span{{{}}}", r.center.join(", "), r.center_cap_h.join(", "));
        let _ = writeln!(
            s,
            "dim X = {} (polarization {}real, {}positive)",
            r.dim_x,
            if r.polarization_real { "" } else { "not " },
            if r.polarization_positive { "" } else { "not " }
        );
        let _ = writeln!(s, "multiplicity m = {}", r.multiplicity);
        let pf: Vec<&str> = r.plancherel_density.samples.iter().map(|p| p.pf.as_str()).collect();
        let _ = writeln!(s, "Plancherel density {}; Pf on Σ° samples: {}", r.plancherel_density.density, pf.join(", "));
        let _ = writeln!(s, "spectrum: {}", r.spectrum);
        for f in &r.flags {
            let _ = writeln!(s, "flag: {f}");
        }
        let _ = writeln!(s, "verdict: {}", r.verdict);
        for (k, v) in &r.citations {
            let _ = writeln!(s, "  [{k}] {v}");
        }
        s
    }
}

pub fn validation_text(rep: &ValidationReport) -> String {
    let mut s = String::new();
    for c in &rep.checks {
        let status = match c.status {
            Status::Pass => "ok",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        };
        let _ = write!(s, "{:<30} {status}", c.name);
        if let Some(code) = c.code {
            let _ = write!(s, "  {code}");
        }
        if !c.detail.is_empty() {
            let _ = write!(s, "  {}", c.detail);
        }
        s.push('\n');
    }
    s
}
