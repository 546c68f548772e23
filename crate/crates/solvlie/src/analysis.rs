//! The full pipeline from a validated spec to the admissibility report.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::admissibility::{
    center_data, citations, decide, is_unimodular, multiplicity, polarization_data, AdmissibilityReport, CenterData,
    PfSample, PlancherelSummary, PolarizationData, TraceEntry, INFINITE_MASS,
};
use crate::algebra::{require_noncommutative, require_valid, validate_spec, LieAlgebraSpec, ValidationReport};
use crate::arith::{fmt_rational, Rational, GR};
use crate::basis::{build_adaptable_basis, format_combo, AdaptableBasis};
use crate::error::{Error, Result};
use crate::field::FLOAT_TOL;
use crate::orbits::{sample_section, stabilizer_data, SectionOracle, StabilizerData};
use crate::pfaffian::plancherel_pfaffian;
use crate::stratification::{generic_layer, Ambient, GenericLayer, SAMPLE_BOUND};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TRIALS: usize = 64;
const PF_SAMPLES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AnalysisOptions {
    pub seed: u64,
    pub trials: usize,
    pub tolerance: f64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { seed: DEFAULT_SEED, trials: DEFAULT_TRIALS, tolerance: FLOAT_TOL }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Sections {
    pub lambda: SectionOracle,
    pub lambda_nu: SectionOracle,
    pub sigma_circ: SectionOracle,
    pub sigma: SectionOracle,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub basis: AdaptableBasis,
    pub validation: ValidationReport,
    pub n_layer: GenericLayer,
    pub g_layer: GenericLayer,
    pub stabilizer: StabilizerData,
    pub sections: Sections,
    /// An exact point of `Σ°` (restricted to `n`).
    pub sigma_point: Vec<GR>,
    pub center: CenterData,
    pub polarization: PolarizationData,
    pub admissibility: AdmissibilityReport,
}

fn real_combo(v: &[Rational], names: &[String]) -> String {
    let v: Vec<GR> = v.iter().cloned().map(GR::real).collect();
    format_combo(&v, names)
}

pub fn analyze(spec: &LieAlgebraSpec, opts: &AnalysisOptions) -> Result<Analysis> {
    let validation = validate_spec(spec);
    require_valid(spec)?;
    require_noncommutative(spec)?;
    let basis = build_adaptable_basis(spec)?;
    let names = spec.labels();

    let center = center_data(spec);
    let (unimodular, traces) = is_unimodular(spec);
    if traces[..spec.n()].iter().any(|t| t != &Rational::from_integer(0.into())) {
        return Err(Error::HypothesisViolation("some tr ad W with W ∈ n is nonzero".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let n_layer = generic_layer(&basis, Ambient::N, &mut rng, opts.trials)?;
    let g_layer = generic_layer(&basis, Ambient::G, &mut rng, opts.trials)?;
    let stab = stabilizer_data(&basis, &n_layer.layer, &g_layer.layer)?;
    let sections = Sections {
        lambda: SectionOracle::lambda(&basis, &n_layer.layer),
        lambda_nu: SectionOracle::lambda_nu(&basis, &n_layer.layer),
        sigma_circ: SectionOracle::sigma_circ(&basis, &n_layer.layer, &stab),
        sigma: SectionOracle::sigma(&basis, &n_layer.layer, &stab),
    };

    let mut points = Vec::new();
    for _ in 0..PF_SAMPLES {
        let p = sample_section(&basis, &sections.sigma_circ, &mut rng, SAMPLE_BOUND)
            .ok_or_else(|| Error::UnsupportedCase("no exact point of Σ° found".into()))?;
        points.push(p);
    }
    let sigma_point = points[0].clone();
    let polarization = polarization_data(&basis, &sigma_point)?;
    let m = multiplicity(&basis, &stab, &polarization);

    let mut samples = Vec::new();
    for p in &points {
        let pf = plancherel_pfaffian(&basis, p, &n_layer.layer.e)?;
        samples.push(PfSample { lambda: p[..basis.n].iter().map(|x| x.to_string()).collect(), pf: pf.to_string() });
    }

    let verdict = decide(unimodular, center.dim_z_cap_h());
    let mut flags = Vec::new();
    if unimodular && m.is_finite() {
        flags.push(INFINITE_MASS);
    }
    let spectrum = format!(
        "Σ° [{}] × k* (dim k = {})",
        sections.sigma_circ.printable_form.clone().unwrap_or_else(|| "see constraints".into()),
        stab.k_dim()
    );
    let admissibility = AdmissibilityReport {
        unimodular,
        trace_table: (spec.n()..spec.dim())
            .map(|k| TraceEntry { element: names[k].clone(), trace: fmt_rational(&traces[k]) })
            .collect(),
        center: center.z_g.basis().iter().map(|v| real_combo(v, &names)).collect(),
        center_cap_h: center.z_cap_h.basis().iter().map(|v| real_combo(v, &names)).collect(),
        dim_z_cap_h: center.dim_z_cap_h(),
        k_dim: stab.k_dim(),
        dim_x: polarization.dim_x,
        polarization_real: polarization.real,
        polarization_positive: polarization.positive,
        multiplicity: m,
        spectrum,
        plancherel_density: PlancherelSummary { density: "|Pf(λ)| dλ dσ", samples },
        verdict,
        citations: citations(verdict, &flags),
        flags,
    };
    Ok(Analysis {
        basis,
        validation,
        n_layer,
        g_layer,
        stabilizer: stab,
        sections,
        sigma_point,
        center,
        polarization,
        admissibility,
    })
}
