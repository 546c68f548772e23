use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::Multiplicity;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Admissible,
    NotAdmissibleUnimodular,
    NotAdmissibleCenterMeetsH,
}

impl Verdict {
    pub fn code(self) -> &'static str {
        match self {
            Verdict::Admissible => "ADMISSIBLE",
            Verdict::NotAdmissibleUnimodular => "NOT_ADMISSIBLE_UNIMODULAR",
            Verdict::NotAdmissibleCenterMeetsH => "NOT_ADMISSIBLE_CENTER_MEETS_H",
        }
    }

    pub fn is_admissible(self) -> bool {
        self == Verdict::Admissible
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// The main theorem as a truth table.
pub fn decide(unimodular: bool, dim_z_cap_h: usize) -> Verdict {
    if unimodular {
        Verdict::NotAdmissibleUnimodular
    } else if dim_z_cap_h == 0 {
        Verdict::Admissible
    } else {
        Verdict::NotAdmissibleCenterMeetsH
    }
}

pub const INFINITE_MASS: &str = "INFINITE_MASS";

/// Reason codes and computed objects mapped to the statements they rest on.
pub fn citations(verdict: Verdict, flags: &[&'static str]) -> BTreeMap<&'static str, &'static str> {
    let mut c = BTreeMap::new();
    c.insert(
        verdict.code(),
        match verdict {
            Verdict::NotAdmissibleUnimodular => {
                "main theorem: \"Assume that G = N⋊H is unimodular. Then τ is never admissible\""
            }
            _ => "main theorem: \"τ is admissible if and only if dim(Z(G) ∩ H) = 0\"",
        },
    );
    if flags.contains(&INFINITE_MASS) {
        c.insert(INFINITE_MASS, "main theorem, unimodular branch of the proof: ∫_Σ m dμ = m·μ(Σ) = ∞");
    }
    c.insert("center", "main theorem condition \"dim(H ∩ Z(G)) = 0\"");
    c.insert("unimodular", "modular function Δ(exp X) = e^{-tr ad X}");
    c.insert("multiplicity", "Lemma \"orbit\": 2^{dim X} if rank(φ_x) = dim X, \"and is infinite otherwise\"");
    c.insert("spectrum", "Theorem \"decomposition\": \"The quasiregular representation is unitarily equivalent\"");
    c.insert("plancherel_density", "Proposition \"Disintegration of the Plancherel measure\"");
    c.insert("stabilizer", "stabilizer lemma: K \"must fix all elements in\" Σ°");
    c
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceEntry {
    pub element: String,
    pub trace: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PfSample {
    /// `λ(Z_a)` for the `n` part of the adaptable basis.
    pub lambda: Vec<String>,
    pub pf: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PlancherelSummary {
    pub density: &'static str,
    pub samples: Vec<PfSample>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdmissibilityReport {
    pub unimodular: bool,
    /// `tr ad A` for each `h` basis element.
    pub trace_table: Vec<TraceEntry>,
    pub center: Vec<String>,
    pub center_cap_h: Vec<String>,
    pub dim_z_cap_h: usize,
    pub k_dim: usize,
    pub dim_x: usize,
    pub polarization_real: bool,
    pub polarization_positive: bool,
    pub multiplicity: Multiplicity,
    pub spectrum: String,
    pub plancherel_density: PlancherelSummary,
    pub verdict: Verdict,
    pub flags: Vec<&'static str>,
    pub citations: BTreeMap<&'static str, &'static str>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truth_table() {
        assert_eq!(decide(true, 0), Verdict::NotAdmissibleUnimodular);
        assert_eq!(decide(true, 2), Verdict::NotAdmissibleUnimodular);
        assert_eq!(decide(false, 0), Verdict::Admissible);
        assert_eq!(decide(false, 1), Verdict::NotAdmissibleCenterMeetsH);
    }

    #[test]
    fn citation_follows_the_verdict() {
        let c = citations(Verdict::NotAdmissibleUnimodular, &[INFINITE_MASS]);
        assert!(c["NOT_ADMISSIBLE_UNIMODULAR"].contains("never admissible"));
        assert!(c.contains_key(INFINITE_MASS));
        assert!(!citations(Verdict::Admissible, &[]).contains_key(INFINITE_MASS));
    }
}
