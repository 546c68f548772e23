//! Cross-sections `Λ`, `Λ_ν`, `Σ°`, `Σ`, the stabilizer `k` and the projection onto `Σ°`.

mod oracle;
mod project;
mod sampler;
mod stabilizer;

pub use oracle::{Constraint, SectionKind, SectionOracle};
pub use project::{h_project, HProjection};
pub use sampler::sample_section;
pub use stabilizer::{stabilizer_data, stabilizer_subalgebra, StabilizerData};
