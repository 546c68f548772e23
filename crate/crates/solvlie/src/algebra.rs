//! Lie algebra specifications `g = n ⋊ h` over `Q` and the standing-hypothesis checks.

use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{parse_rational, Rational, GR};
use crate::error::{Error, Result};
use crate::linalg::{self, Subspace};
use crate::weights;

/// A real basis `n_names ++ h_names` of `g` together with its structure constants.
#[derive(Clone, Debug)]
pub struct LieAlgebraSpec {
    pub name: String,
    pub n_names: Vec<String>,
    pub h_names: Vec<String>,
    /// `[e_a, e_b] = Σ_c consts[a][b][c] e_c`
    consts: Vec<Vec<Vec<Rational>>>,
    /// Pairs whose stated brackets contradict antisymmetry.
    conflicts: Vec<(String, String)>,
    /// Labelled hint vectors in real coordinates (length `n + r`).
    pub hint: Option<Vec<(String, Vec<GR>)>>,
    /// Optional short names for the coordinates `f(Z_j)`, keyed by hint label.
    pub coord_names: HashMap<String, String>,
}

#[derive(Deserialize)]
struct RawTerm {
    c: String,
    b: String,
}

#[derive(Deserialize)]
struct RawBracket {
    x: String,
    y: String,
    #[serde(default)]
    value: Vec<RawTerm>,
}

#[derive(Deserialize)]
struct RawHint {
    label: String,
    value: Vec<RawTerm>,
    #[serde(default)]
    coord: Option<String>,
}

#[derive(Deserialize)]
struct RawSpec {
    #[serde(default)]
    name: String,
    n_basis: Vec<String>,
    #[serde(default)]
    h_basis: Vec<String>,
    #[serde(default)]
    brackets: Vec<RawBracket>,
    #[serde(default)]
    adaptable_hint: Option<Vec<RawHint>>,
}

impl LieAlgebraSpec {
    /// Parses the JSON spec format. Unknown top-level keys are ignored.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawSpec = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let mut builder = SpecBuilder::new(&raw.name, raw.n_basis, raw.h_basis)?;
        for br in &raw.brackets {
            let mut value = Vec::new();
            for t in &br.value {
                value.push((parse_rational(&t.c)?, t.b.clone()));
            }
            builder.bracket_terms(&br.x, &br.y, &value)?;
        }
        if let Some(h) = raw.adaptable_hint {
            let mut hint = Vec::new();
            for entry in h {
                let mut v = vec![GR::zero(); builder.dim()];
                for t in &entry.value {
                    let c: GR = t.c.parse()?;
                    v[builder.index(&t.b)?] += &c;
                }
                if let Some(c) = entry.coord {
                    builder.spec.coord_names.insert(entry.label.clone(), c);
                }
                hint.push((entry.label, v));
            }
            builder.spec.hint = Some(hint);
        }
        Ok(builder.spec)
    }

    pub fn n(&self) -> usize {
        self.n_names.len()
    }

    pub fn r(&self) -> usize {
        self.h_names.len()
    }

    pub fn dim(&self) -> usize {
        self.n() + self.r()
    }

    pub fn labels(&self) -> Vec<String> {
        self.n_names.iter().chain(&self.h_names).cloned().collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.n_names.iter().chain(&self.h_names).position(|l| l == label)
    }

    pub fn label(&self, k: usize) -> &str {
        if k < self.n() {
            &self.n_names[k]
        } else {
            &self.h_names[k - self.n()]
        }
    }

    /// Coefficients of `[e_a, e_b]`.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[Rational] {
        &self.consts[a][b]
    }

    /// `[x, y]` for real-coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for a in 0..d {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..d {
                if y[b].is_zero() {
                    continue;
                }
                let w = &x[a] * &y[b];
                for (c, k) in self.consts[a][b].iter().enumerate() {
                    if !k.is_zero() {
                        out[c] += &w * k;
                    }
                }
            }
        }
        out
    }

    /// Bracket of complexified vectors in real coordinates.
    pub fn bracket_c(&self, x: &[GR], y: &[GR]) -> Vec<GR> {
        let d = self.dim();
        let mut out = vec![GR::zero(); d];
        for a in 0..d {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..d {
                if y[b].is_zero() {
                    continue;
                }
                let w = &x[a] * &y[b];
                for (c, k) in self.consts[a][b].iter().enumerate() {
                    if !k.is_zero() {
                        out[c] += &w.scale(k);
                    }
                }
            }
        }
        out
    }

    pub fn antisymmetry_conflicts(&self) -> &[(String, String)] {
        &self.conflicts
    }

    pub fn is_n_commutative(&self) -> bool {
        let n = self.n();
        (0..n).all(|a| (0..n).all(|b| self.consts[a][b].iter().all(Zero::is_zero)))
    }
}

/// Programmatic construction of specs, used by tests and the corpus.
pub struct SpecBuilder {
    spec: LieAlgebraSpec,
    set: HashMap<(usize, usize), Vec<Rational>>,
}

impl SpecBuilder {
    pub fn new<S: Into<String>>(name: &str, n_names: Vec<S>, h_names: Vec<S>) -> Result<Self> {
        let n_names: Vec<String> = n_names.into_iter().map(Into::into).collect();
        let h_names: Vec<String> = h_names.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for l in n_names.iter().chain(&h_names) {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let d = n_names.len() + h_names.len();
        Ok(SpecBuilder {
            spec: LieAlgebraSpec {
                name: name.to_string(),
                n_names,
                h_names,
                consts: vec![vec![vec![Rational::zero(); d]; d]; d],
                conflicts: vec![],
                hint: None,
                coord_names: HashMap::new(),
            },
            set: HashMap::new(),
        })
    }

    fn dim(&self) -> usize {
        self.spec.dim()
    }

    fn index(&self, l: &str) -> Result<usize> {
        self.spec.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))
    }

    /// Records `[x, y] = Σ c·b`, completing antisymmetrically.
    pub fn bracket_terms(&mut self, x: &str, y: &str, value: &[(Rational, String)]) -> Result<&mut Self> {
        let (a, b) = (self.index(x)?, self.index(y)?);
        let mut v = vec![Rational::zero(); self.dim()];
        for (c, l) in value {
            v[self.index(l)?] += c;
        }
        let neg: Vec<Rational> = v.iter().map(|c| -c.clone()).collect();
        let conflict = (a == b && v.iter().any(|c| !c.is_zero()))
            || self.set.get(&(a, b)).is_some_and(|old| *old != v)
            || self.set.get(&(b, a)).is_some_and(|old| *old != neg);
        if conflict {
            self.spec.conflicts.push((x.to_string(), y.to_string()));
        }
        self.set.insert((a, b), v.clone());
        if a != b {
            self.set.insert((b, a), neg.clone());
            self.spec.consts[b][a] = neg;
        }
        self.spec.consts[a][b] = v;
        Ok(self)
    }

    /// Shorthand taking `"p/q"` strings.
    pub fn bracket(&mut self, x: &str, y: &str, value: &[(&str, &str)]) -> Result<&mut Self> {
        let mut terms = Vec::new();
        for (c, l) in value {
            terms.push((parse_rational(c)?, l.to_string()));
        }
        self.bracket_terms(x, y, &terms)
    }

    pub fn hint(&mut self, vectors: Vec<(&str, Vec<(&str, &str)>)>) -> Result<&mut Self> {
        let mut hint = Vec::new();
        for (label, terms) in vectors {
            let mut v = vec![GR::zero(); self.dim()];
            for (c, l) in terms {
                let c: GR = c.parse()?;
                v[self.index(l)?] += &c;
            }
            hint.push((label.to_string(), v));
        }
        self.spec.hint = Some(hint);
        Ok(self)
    }

    pub fn coord_name(&mut self, label: &str, name: &str) -> &mut Self {
        self.spec.coord_names.insert(label.to_string(), name.to_string());
        self
    }

    pub fn build(&self) -> LieAlgebraSpec {
        self.spec.clone()
    }
}

/// Matrix of `ad W` on the real basis: column `b` holds `[W, e_b]`.
pub fn ad_matrix(spec: &LieAlgebraSpec, w: &[Rational]) -> Vec<Vec<Rational>> {
    let d = spec.dim();
    let mut m = vec![vec![Rational::zero(); d]; d];
    for b in 0..d {
        let col = spec.bracket(w, &linalg::unit::<Rational>(b, d));
        for (c, x) in col.into_iter().enumerate() {
            m[c][b] = x;
        }
    }
    m
}

/// `ad A_t` restricted to `n`, for the `t`-th element of `h`.
pub fn ad_h_on_n(spec: &LieAlgebraSpec, t: usize) -> Vec<Vec<Rational>> {
    let n = spec.n();
    let full = ad_matrix(spec, &linalg::unit::<Rational>(n + t, spec.dim()));
    full[..n].iter().map(|row| row[..n].to_vec()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code: Option<&'static str>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
}

impl Check {
    fn pass(name: &'static str) -> Self {
        Check { name, status: Status::Pass, code: None, detail: String::new(), witness: vec![] }
    }

    fn fail(name: &'static str, code: &'static str, detail: String, witness: Vec<String>) -> Self {
        Check { name, status: Status::Fail, code: Some(code), detail, witness }
    }

    fn skipped(name: &'static str, detail: &str) -> Self {
        Check { name, status: Status::Skipped, code: None, detail: detail.to_string(), witness: vec![] }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn jacobi_witness(spec: &LieAlgebraSpec) -> Option<(usize, usize, usize)> {
    let d = spec.dim();
    let e = |k| linalg::unit::<Rational>(k, d);
    for a in 0..d {
        for b in a + 1..d {
            let ab = spec.bracket(&e(a), &e(b));
            for c in b + 1..d {
                let bc = spec.bracket(&e(b), &e(c));
                let ca = spec.bracket(&e(c), &e(a));
                let s1 = spec.bracket(&ab, &e(c));
                let s2 = spec.bracket(&bc, &e(a));
                let s3 = spec.bracket(&ca, &e(b));
                if s1.iter().zip(&s2).zip(&s3).any(|((x, y), z)| !(x + y + z).is_zero()) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Lower central series `C^1 = n ⊇ C^2 = [n, n] ⊇ …` in `n`-coordinates.
/// Stops at the first repeat; `None` when it stalls above zero.
pub fn lower_central_series(spec: &LieAlgebraSpec) -> Option<Vec<Subspace<Rational>>> {
    let n = spec.n();
    let pad = |v: &[Rational]| {
        let mut w = v.to_vec();
        w.resize(spec.dim(), Rational::zero());
        w
    };
    let mut series = vec![Subspace::<Rational>::full(n)];
    loop {
        let last = series.last().unwrap();
        let mut gens = Vec::new();
        for a in 0..n {
            for v in last.basis() {
                let w = spec.bracket(&linalg::unit::<Rational>(a, spec.dim()), &pad(v));
                gens.push(w[..n].to_vec());
            }
        }
        let next = Subspace::span(gens, n);
        if next.dim() == 0 {
            series.push(next);
            return Some(series);
        }
        if next.dim() == last.dim() {
            return None;
        }
        series.push(next);
    }
}

/// Checks the standing hypotheses one by one; never short-circuits on the first failure
/// except where a later check would be meaningless.
pub fn validate_spec(spec: &LieAlgebraSpec) -> ValidationReport {
    let mut checks = Vec::new();
    let (n, d) = (spec.n(), spec.dim());

    if spec.conflicts.is_empty() {
        checks.push(Check::pass("antisymmetry"));
    } else {
        let (x, y) = spec.conflicts[0].clone();
        checks.push(Check::fail(
            "antisymmetry",
            "ANTISYMMETRY_FAIL",
            format!("[{x},{y}] contradicts [{y},{x}]"),
            vec![x, y],
        ));
    }

    match jacobi_witness(spec) {
        None => checks.push(Check::pass("jacobi")),
        Some((a, b, c)) => {
            let mut w = vec![spec.label(a).to_string(), spec.label(b).to_string(), spec.label(c).to_string()];
            w.sort();
            checks.push(Check::fail(
                "jacobi",
                "JACOBI_FAIL",
                format!("Jacobi identity fails on ({})", w.join(", ")),
                w,
            ));
        }
    }

    let mut h_ok = true;
    'h: for a in n..d {
        for b in n..d {
            if spec.consts[a][b].iter().any(|x| !x.is_zero()) {
                checks.push(Check::fail(
                    "h_abelian",
                    "H_NOT_ABELIAN",
                    format!("[{}, {}] ≠ 0", spec.label(a), spec.label(b)),
                    vec![spec.label(a).to_string(), spec.label(b).to_string()],
                ));
                h_ok = false;
                break 'h;
            }
        }
    }
    if h_ok {
        checks.push(Check::pass("h_abelian"));
    }

    let mut in_n = true;
    'n: for a in 0..d {
        for b in 0..n {
            if spec.consts[a][b][n..].iter().any(|x| !x.is_zero()) {
                checks.push(Check::fail(
                    "brackets_in_n",
                    "BRACKET_OUTSIDE_N",
                    format!("[{}, {}] has an h-component", spec.label(a), spec.label(b)),
                    vec![spec.label(a).to_string(), spec.label(b).to_string()],
                ));
                in_n = false;
                break 'n;
            }
        }
    }
    if in_n {
        checks.push(Check::pass("brackets_in_n"));
    }

    if spec.is_n_commutative() {
        checks.push(Check::fail("n_noncommutative", "N_COMMUTATIVE", "n is commutative".into(), vec![]));
    } else {
        checks.push(Check::pass("n_noncommutative"));
    }

    if !in_n {
        for name in ["n_nilpotent", "diagonalizable", "gaussian_rational_eigenvalues", "exponential"] {
            checks.push(Check::skipped(name, "n is not an ideal"));
        }
        return ValidationReport { checks };
    }

    match lower_central_series(spec) {
        Some(_) => checks.push(Check::pass("n_nilpotent")),
        None => checks.push(Check::fail(
            "n_nilpotent",
            "N_NOT_NILPOTENT",
            "lower central series of n stalls above zero".into(),
            vec![],
        )),
    }

    match weights::weight_decomposition(spec) {
        Ok(ws) => {
            checks.push(Check::pass("gaussian_rational_eigenvalues"));
            checks.push(Check::pass("diagonalizable"));
            match ws.iter().find(|w| w.alpha().is_none()) {
                None => checks.push(Check::pass("exponential")),
                Some(w) => checks.push(Check::fail(
                    "exponential",
                    "PURELY_IMAGINARY_ROOT",
                    format!("weight {} is not of the form λ(1+iα)", weights::fmt_weight(&w.weight, &spec.h_names)),
                    vec![],
                )),
            }
        }
        Err(Error::EigenNotGaussianRational) => {
            checks.push(Check::fail(
                "gaussian_rational_eigenvalues",
                "EIGEN_NOT_GAUSSIAN_RATIONAL",
                "some ad(A) has an eigenvalue outside Q(i)".into(),
                vec![],
            ));
            checks.push(Check::skipped("diagonalizable", "eigenvalues not in Q(i)"));
            checks.push(Check::skipped("exponential", "eigenvalues not in Q(i)"));
        }
        Err(_) => {
            checks.push(Check::pass("gaussian_rational_eigenvalues"));
            checks.push(Check::fail(
                "diagonalizable",
                "NOT_DIAGONALIZABLE",
                "ad(h) on n_C has no joint eigenbasis".into(),
                vec![],
            ));
            checks.push(Check::skipped("exponential", "not diagonalizable"));
        }
    }
    ValidationReport { checks }
}

/// The main theorem needs a noncommutative nilradical.
pub fn require_noncommutative(spec: &LieAlgebraSpec) -> Result<()> {
    if spec.is_n_commutative() {
        Err(Error::HypothesisViolation("n is commutative".into()))
    } else {
        Ok(())
    }
}

/// Fails with the first failing check of `validate_spec`.
pub fn require_valid(spec: &LieAlgebraSpec) -> Result<()> {
    let rep = validate_spec(spec);
    let first = rep.failures().next().cloned();
    match first {
        None => Ok(()),
        Some(c) if c.code == Some("EIGEN_NOT_GAUSSIAN_RATIONAL") => Err(Error::EigenNotGaussianRational),
        Some(c) if c.code == Some("NOT_DIAGONALIZABLE") => Err(Error::NotDiagonalizable),
        Some(c) => Err(Error::HypothesisViolation(format!("{}: {}", c.code.unwrap_or(c.name), c.detail))),
    }
}
