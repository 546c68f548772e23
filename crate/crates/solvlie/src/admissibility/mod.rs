//! Center, unimodularity, polarization data, the multiplicity function and
//! the admissibility verdict.

mod center;
mod disintegration;
mod multiplicity;
mod polarization;
mod verdict;

pub use center::{center_data, is_unimodular, trace_table, CenterData};
pub use disintegration::{disintegration_check, BumpFunction, DisintegrationReport, MAX_REL_STD_ERR};
pub use multiplicity::{multiplicity, x_weights, Multiplicity};
pub use polarization::{polarization_data, PolarizationData};
pub use verdict::{
    citations, decide, AdmissibilityReport, PfSample, PlancherelSummary, TraceEntry, Verdict, INFINITE_MASS,
};

use crate::algebra::LieAlgebraSpec;
use crate::analysis::{analyze, AnalysisOptions};
use crate::error::Result;

/// Runs the pipeline and keeps the admissibility part.
pub fn verdict(spec: &LieAlgebraSpec, opts: &AnalysisOptions) -> Result<AdmissibilityReport> {
    analyze(spec, opts).map(|a| a.admissibility)
}
