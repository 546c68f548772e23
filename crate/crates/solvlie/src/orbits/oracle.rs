use serde::Serialize;

use crate::arith::{Rational, GR};
use crate::basis::{format_combo, AdaptableBasis};
use crate::field::Field;
use crate::linalg;
use crate::stratification::{analyze_point, jump_data, Ambient, LayerDescriptor, PointData};

use super::StabilizerData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SectionKind {
    Lambda,
    LambdaNu,
    SigmaCirc,
    Sigma,
}

/// One defining condition; `j` and `k` are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Constraint {
    /// `f(Z_j) = 0`
    Vanish { j: usize },
    /// `f(Z_j(f)) = 0` with `j = i_k`
    Case2Combo { j: usize, k: usize },
    /// `Re(f[ρ_{k-1}(conj Z_j), Re Z_{i_k}] f(Z_j)) = Re(f[ρ_{k-1}(conj Z_j), Im Z_{i_k}] f(Z_j)) = 0`, `j = j_k`
    Case3Combo { j: usize, k: usize },
    /// `|f(Z_j)| = 1`
    ModulusOne { j: usize },
    /// `f(Z_j) ≠ 0`
    Nonzero { j: usize },
    /// `l(A_t) = 0` for the `t`-th normalized complement vector.
    HPartZero { t: usize },
}

/// Membership test for `Λ`, `Λ_ν`, `Σ°` or `Σ`.
#[derive(Clone, Debug, Serialize)]
pub struct SectionOracle {
    pub kind: SectionKind,
    /// Fine layer `(e°, j°)` of `n*` the section lives in.
    pub e: Vec<usize>,
    pub j: Vec<usize>,
    pub constraints: Vec<Constraint>,
    pub printable_form: Option<String>,
    #[serde(skip)]
    a_basis: Vec<Vec<Rational>>,
    #[serde(skip)]
    labels: Vec<String>,
}

/// Which of the three cases governs `f(Z_j(f)) = 0` for `j ∈ e°`.
fn lambda_constraint(basis: &AdaptableBasis, layer: &LayerDescriptor, j: usize) -> Constraint {
    if basis.in_i(j) || layer.e.contains(&(j + 1)) {
        return Constraint::Vanish { j };
    }
    let k = layer.pair_of(j).expect("j ∈ e°");
    if layer.i[k - 1] == j {
        Constraint::Case2Combo { j, k }
    } else {
        Constraint::Case3Combo { j, k }
    }
}

fn coord_name(basis: &AdaptableBasis, j: usize) -> String {
    basis.coord_names[j - 1].clone().unwrap_or_else(|| format!("f({})", basis.labels[j - 1]))
}

impl SectionOracle {
    pub fn lambda(basis: &AdaptableBasis, n_layer: &LayerDescriptor) -> Self {
        let constraints = n_layer.e.iter().map(|&j| lambda_constraint(basis, n_layer, j)).collect();
        let mut o = SectionOracle {
            kind: SectionKind::Lambda,
            e: n_layer.e.clone(),
            j: n_layer.j.clone(),
            constraints,
            printable_form: None,
            a_basis: Vec::new(),
            labels: basis.labels.clone(),
        };
        o.printable_form = o.render(basis);
        o
    }

    pub fn lambda_nu(basis: &AdaptableBasis, n_layer: &LayerDescriptor) -> Self {
        let mut o = Self::lambda(basis, n_layer);
        o.kind = SectionKind::LambdaNu;
        for j in (1..=basis.n).filter(|j| !n_layer.e.contains(j)) {
            o.constraints.push(Constraint::Nonzero { j });
        }
        o.printable_form = o.render(basis);
        o
    }

    pub fn sigma_circ(basis: &AdaptableBasis, n_layer: &LayerDescriptor, stab: &StabilizerData) -> Self {
        let mut o = Self::lambda_nu(basis, n_layer);
        o.kind = SectionKind::SigmaCirc;
        for &j in &stab.phi {
            o.constraints.push(Constraint::ModulusOne { j });
        }
        o.printable_form = o.render(basis);
        o
    }

    pub fn sigma(basis: &AdaptableBasis, n_layer: &LayerDescriptor, stab: &StabilizerData) -> Self {
        let mut o = Self::sigma_circ(basis, n_layer, stab);
        o.kind = SectionKind::Sigma;
        o.a_basis = stab.normalized.clone();
        for t in 0..stab.normalized.len() {
            o.constraints.push(Constraint::HPartZero { t });
        }
        o.printable_form = o.render(basis);
        o
    }

    /// Closed form, available when every `e°` condition is a plain vanishing.
    fn render(&self, basis: &AdaptableBasis) -> Option<String> {
        let pair_first = |j: usize| basis.sigma[j - 1] + 1 >= j;
        let mut vanish = Vec::new();
        let (mut nonzero, mut modulus, mut hpart) = (Vec::new(), Vec::new(), Vec::new());
        for c in &self.constraints {
            match *c {
                Constraint::Vanish { j } => vanish.push(j),
                Constraint::Nonzero { j } => nonzero.push(j),
                Constraint::ModulusOne { j } => modulus.push(j),
                Constraint::HPartZero { t } => hpart.push(t),
                _ => return None,
            }
        }
        let mut parts = Vec::new();
        let names: Vec<String> =
            vanish.iter().rev().filter(|&&j| pair_first(j)).map(|&j| coord_name(basis, j)).collect();
        if !names.is_empty() {
            parts.push(format!("{} = 0", names.join(" = ")));
        }
        for &j in nonzero.iter().filter(|&&j| pair_first(j) && !modulus.contains(&j)) {
            parts.push(format!("{} ≠ 0", coord_name(basis, j)));
        }
        for &j in modulus.iter().filter(|&&j| pair_first(j)) {
            parts.push(format!("|{}| = 1", coord_name(basis, j)));
        }
        for &t in &hpart {
            let v: Vec<GR> = self.a_basis[t].iter().cloned().map(GR::real).collect();
            parts.push(format!("l({}) = 0", format_combo(&v, &basis.h_names)));
        }
        Some(if parts.is_empty() { "all of the layer".into() } else { parts.join(", ") })
    }

    /// Exact membership for exact scalars; float scalars compare against `tol`.
    pub fn contains<F: Field>(&self, basis: &AdaptableBasis, l: &[F], tol: f64) -> bool {
        self.violations(basis, l, tol).map(|v| v.is_empty()).unwrap_or(false)
    }

    /// The violated constraints, or `None` if `l` is off the fine layer.
    pub fn violations<F: Field>(&self, basis: &AdaptableBasis, l: &[F], tol: f64) -> Option<Vec<Constraint>> {
        let mut l = l.to_vec();
        l.resize(basis.dim(), F::zero());
        let jump = jump_data(basis, &l, Ambient::N);
        let mut j = self.j.clone();
        j.sort_unstable();
        if jump.e() != self.e || jump.j_sorted() != j {
            return None;
        }
        let needs_sections =
            self.constraints.iter().any(|c| matches!(c, Constraint::Case2Combo { .. } | Constraint::Case3Combo { .. }));
        let point: Option<PointData<F>> =
            if needs_sections { Some(analyze_point(basis, &l, Ambient::N).ok()?) } else { None };
        let small = |x: F| x.is_negligible(tol);
        let mut bad = Vec::new();
        for c in &self.constraints {
            let ok = match *c {
                Constraint::Vanish { j } => small(l[j - 1].clone()),
                Constraint::Nonzero { j } => !small(l[j - 1].clone()),
                Constraint::ModulusOne { j } => {
                    let x = &l[j - 1];
                    small(x.clone() * x.conj() - F::one())
                }
                Constraint::Case2Combo { k, .. } => {
                    let p = point.as_ref().expect("sections computed");
                    small(linalg::dot(&l, &p.sections.z_i[k - 1]))
                }
                Constraint::Case3Combo { j, k } => {
                    let p = point.as_ref().expect("sections computed");
                    let (c1, c2) = case3_coefficients(basis, &l, p, j, k);
                    small((c1 * l[j - 1].clone()).re()) && small((c2 * l[j - 1].clone()).re())
                }
                Constraint::HPartZero { t } => {
                    let v = self.a_basis[t].iter().enumerate().fold(F::zero(), |acc, (u, c)| {
                        acc + F::from_gaussian(&GR::real(c.clone())) * l[basis.n + u].clone()
                    });
                    small(v)
                }
            };
            if !ok {
                bad.push(c.clone());
            }
        }
        Some(bad)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn a_basis(&self) -> &[Vec<Rational>] {
        &self.a_basis
    }
}

/// `(f[ρ_{k-1}(conj Z_j), Re Z_{i_k}], f[ρ_{k-1}(conj Z_j), Im Z_{i_k}])`
pub(crate) fn case3_coefficients<F: Field>(
    basis: &AdaptableBasis,
    l: &[F],
    p: &PointData<F>,
    j: usize,
    k: usize,
) -> (F, F) {
    let big = basis.dim();
    let conj_zj = basis.conj(&linalg::unit::<F>(j - 1, big));
    let r = p.sections.rho(basis, k - 1, &conj_zj);
    let ik = p.jump.i[k - 1] - 1;
    (basis.pair(l, &r, &basis.re_part(ik)), basis.pair(l, &r, &basis.im_part(ik)))
}
