//! Adaptable bases of `g_C` and coordinates with respect to them.
//!
//! Every vector and functional downstream of this module is written in
//! adaptable coordinates: a vector `x` stands for `Σ x_a Z_a` and a
//! functional `l` for the values `l(Z_a)`. Indices are 0-based here; the
//! flag member `c_j` is spanned by the first `j` basis vectors.

use num_traits::Zero;

use crate::algebra::{lower_central_series, LieAlgebraSpec};
use crate::arith::{Rational, GR};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Subspace};
use crate::weights::{self, weight_alpha};

#[derive(Clone, Debug)]
pub struct AdaptableBasis {
    pub n: usize,
    pub r: usize,
    pub h_names: Vec<String>,
    /// `Z_a` in real coordinates; the last `r` rows are the `A_t`.
    pub vectors: Vec<Vec<GR>>,
    pub labels: Vec<String>,
    /// Short coordinate names for `f(Z_a)`, where the spec provides them.
    pub coord_names: Vec<Option<String>>,
    /// `Z_{σ(a)} = conj(Z_a)`
    pub sigma: Vec<usize>,
    /// `γ_a(A_t)`; zero rows for the `A_t` themselves.
    pub weights: Vec<Vec<GR>>,
    pub alpha: Vec<Rational>,
    /// `self_conj[j]` iff `c_j` is self-conjugate, `j = 0..=n+r`.
    pub self_conj: Vec<bool>,
    m_inv: Vec<Vec<GR>>,
    /// Adaptable coordinates of `[Z_a, Z_b]`.
    consts: Vec<Vec<Vec<GR>>>,
    /// Joint eigenvectors of `ad h` on `g_C` (adaptable coordinates) and their weights.
    pub eigvecs: Vec<Vec<GR>>,
    pub eigweights: Vec<Vec<GR>>,
}

fn hint_err(condition: u8, detail: impl Into<String>) -> Error {
    Error::HintInvalid { condition, detail: detail.into() }
}

fn is_real_vec(v: &[GR]) -> bool {
    v.iter().all(|x| x.im.is_zero())
}

fn conj_vec(v: &[GR]) -> Vec<GR> {
    v.iter().map(GR::conj).collect()
}

/// Renders `Σ v_k label_k`, e.g. `X+i Y` or `1/2 Z-W`.
pub fn format_combo(v: &[GR], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let one = GR::from(1);
        let term = if *c == one {
            name.clone()
        } else if *c == -one.clone() {
            format!("-{name}")
        } else if c.re.is_zero() || c.im.is_zero() {
            format!("{c} {name}")
        } else {
            format!("({c}) {name}")
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl AdaptableBasis {
    /// Assembles the basis from `N` vectors and checks conditions 1–4.
    fn assemble(spec: &LieAlgebraSpec, vectors: Vec<Vec<GR>>, labels: Vec<String>) -> Result<Self> {
        let (n, r, big) = (spec.n(), spec.r(), spec.dim());
        if vectors.len() != big {
            return Err(hint_err(
                1,
                format!("expected {n} vectors for n, got {}", vectors.len() - r.min(vectors.len())),
            ));
        }
        for (a, v) in vectors.iter().enumerate().take(n) {
            if v[n..].iter().any(|x| !x.is_zero()) {
                return Err(hint_err(1, format!("{} has an h-component", labels[a])));
            }
        }
        let m_inv = linalg::inverse(&vectors).ok_or_else(|| hint_err(1, "vectors are linearly dependent"))?;

        let mut self_conj = vec![true; big + 1];
        for (j, sc) in self_conj.iter_mut().enumerate().skip(1) {
            let c = Subspace::span(vectors[..j].to_vec(), big);
            *sc = c == c.conj_entrywise();
        }
        let mut sigma: Vec<usize> = (0..big).collect();
        for a in 0..big {
            if !self_conj[a + 1] {
                sigma[a] = a + 1;
            } else if !self_conj[a] {
                sigma[a] = a - 1;
            }
        }
        for a in 0..big {
            if !self_conj[a + 1] {
                if a + 1 >= n || vectors[a + 1] != conj_vec(&vectors[a]) {
                    return Err(hint_err(
                        2,
                        format!("c_{} is not self-conjugate but the next vector is not conj({})", a + 1, labels[a]),
                    ));
                }
                if !self_conj[a + 2] {
                    return Err(hint_err(2, format!("c_{} is not self-conjugate", a + 2)));
                }
            } else if self_conj[a] && !is_real_vec(&vectors[a]) {
                return Err(hint_err(3, format!("{} must be real", labels[a])));
            }
        }

        let to_adapt = |v: &[GR]| -> Vec<GR> {
            (0..big).map(|c| (0..big).fold(GR::zero(), |acc, p| &acc + &(&v[p] * &m_inv[p][c]))).collect()
        };
        let mut consts = vec![vec![Vec::new(); big]; big];
        for a in 0..big {
            for b in 0..big {
                consts[a][b] = to_adapt(&spec.bracket_c(&vectors[a], &vectors[b]));
            }
        }
        for a in 0..big {
            for b in 0..big {
                if let Some(c) = (b + 1..big).find(|&c| !consts[a][b][c].is_zero()) {
                    return Err(hint_err(
                        1,
                        format!("[{}, {}] leaves c_{} (component on {})", labels[a], labels[b], b + 1, labels[c]),
                    ));
                }
            }
        }

        let mut weights = vec![vec![GR::zero(); r]; big];
        let mut alpha = vec![Rational::zero(); big];
        for b in 0..n {
            for t in 0..r {
                weights[b][t] = consts[n + t][b][b].clone();
            }
            alpha[b] = weight_alpha(&weights[b])
                .ok_or_else(|| hint_err(4, format!("weight of {} is not λ(1+iα)", labels[b])))?;
        }

        let mut eigvecs = Vec::new();
        let mut eigweights = Vec::new();
        for ws in weights::weight_decomposition(spec)? {
            for v in ws.space.basis() {
                let mut real = v.clone();
                real.resize(big, GR::zero());
                eigvecs.push(to_adapt(&real));
                eigweights.push(ws.weight.clone());
            }
        }
        for t in 0..r {
            eigvecs.push(linalg::unit(n + t, big));
            eigweights.push(vec![GR::zero(); r]);
        }

        Ok(AdaptableBasis {
            n,
            r,
            h_names: spec.h_names.clone(),
            vectors,
            coord_names: labels.iter().map(|l| spec.coord_names.get(l).cloned()).collect(),
            labels,
            sigma,
            weights,
            alpha,
            self_conj,
            m_inv,
            consts,
            eigvecs,
            eigweights,
        })
    }

    /// Verifies a user hint of length `n`, or `n + r` ending in the `h` basis.
    pub fn from_hint(spec: &LieAlgebraSpec, hint: &[(String, Vec<GR>)]) -> Result<Self> {
        let (n, r, big) = (spec.n(), spec.r(), spec.dim());
        if hint.len() != n && hint.len() != big {
            return Err(hint_err(1, format!("expected {n} or {big} vectors, got {}", hint.len())));
        }
        if hint.len() == big {
            for t in 0..r {
                if hint[n + t].1 != linalg::unit::<GR>(n + t, big) {
                    return Err(hint_err(1, format!("trailing vector {} must be {}", n + t + 1, spec.h_names[t])));
                }
            }
        }
        let mut vectors: Vec<Vec<GR>> = hint[..n].iter().map(|(_, v)| v.clone()).collect();
        let mut labels: Vec<String> = hint[..n].iter().map(|(l, _)| l.clone()).collect();
        for t in 0..r {
            vectors.push(linalg::unit(n + t, big));
            labels.push(spec.h_names[t].clone());
        }
        Self::assemble(spec, vectors, labels)
    }

    /// Builds a basis from joint eigenvectors refining the lower central series.
    pub fn construct(spec: &LieAlgebraSpec) -> Result<Self> {
        let (n, r, big) = (spec.n(), spec.r(), spec.dim());
        let ws = weights::weight_decomposition(spec)?;
        let lcs = lower_central_series(spec).ok_or_else(|| Error::ConstructionFailed("n is not nilpotent".into()))?;
        let lift = |s: &Subspace<Rational>| -> Subspace<GR> {
            Subspace::span(
                s.basis().iter().map(|v| v.iter().cloned().map(GR::real).collect::<Vec<_>>()).collect::<Vec<_>>(),
                n,
            )
        };
        let mut vectors: Vec<Vec<GR>> = Vec::new();
        for k in (0..lcs.len() - 1).rev() {
            let upper = lift(&lcs[k]);
            let lower = lift(&lcs[k + 1]);
            for w in &ws {
                let first_im = w.weight.iter().find(|g| !g.im.is_zero());
                if first_im.is_some_and(|g| g.im < Rational::zero()) {
                    continue;
                }
                let layer = upper.intersect(&w.space);
                let below = lower.intersect(&w.space);
                for v in below.complement_in(layer.basis()) {
                    if first_im.is_some() {
                        vectors.push(v.clone());
                        vectors.push(conj_vec(&v));
                    } else {
                        vectors.push(v);
                    }
                }
            }
        }
        if vectors.len() != n {
            return Err(Error::ConstructionFailed(format!("found {} of {n} basis vectors", vectors.len())));
        }
        let labels: Vec<String> = vectors.iter().map(|v| format_combo(v, &spec.n_names)).collect();
        let mut full: Vec<Vec<GR>> = vectors
            .into_iter()
            .map(|mut v| {
                v.resize(big, GR::zero());
                v
            })
            .collect();
        let mut labels = labels;
        for t in 0..r {
            full.push(linalg::unit(n + t, big));
            labels.push(spec.h_names[t].clone());
        }
        Self::assemble(spec, full, labels).map_err(|e| match e {
            Error::HintInvalid { condition, detail } => {
                Error::ConstructionFailed(format!("condition {condition}: {detail}"))
            }
            e => e,
        })
    }

    pub fn dim(&self) -> usize {
        self.n + self.r
    }

    /// Real coordinates of `Σ x_a Z_a`.
    pub fn to_real(&self, x: &[GR]) -> Vec<GR> {
        let big = self.dim();
        let mut out = vec![GR::zero(); big];
        for (a, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = linalg::axpy(&out, c, &self.vectors[a]);
            }
        }
        out
    }

    /// Adaptable coordinates of a real-coordinate vector.
    pub fn to_adaptable(&self, v: &[GR]) -> Vec<GR> {
        let big = self.dim();
        (0..big).map(|c| (0..big).fold(GR::zero(), |acc, p| &acc + &(&v[p] * &self.m_inv[p][c]))).collect()
    }

    /// `l(Z_a)` from the values of `l` on the real basis.
    pub fn functional_from_real<F: Field>(&self, l_real: &[F]) -> Vec<F> {
        self.vectors
            .iter()
            .map(|row| row.iter().zip(l_real).fold(F::zero(), |acc, (m, x)| acc + F::from_gaussian(m) * x.clone()))
            .collect()
    }

    /// Values on the real basis of a functional given by `l(Z_a)`.
    pub fn functional_to_real<F: Field>(&self, l: &[F]) -> Vec<F> {
        let big = self.dim();
        (0..big)
            .map(|p| (0..big).fold(F::zero(), |acc, a| acc + F::from_gaussian(&self.m_inv[p][a]) * l[a].clone()))
            .collect()
    }

    /// Adaptable coordinates of `[Z_a, Z_b]`.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[GR] {
        &self.consts[a][b]
    }

    pub fn bracket<F: Field>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let big = self.dim();
        let mut out = vec![F::zero(); big];
        for a in 0..big {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..big {
                if y[b].is_zero() {
                    continue;
                }
                let w = x[a].clone() * y[b].clone();
                for (c, k) in self.consts[a][b].iter().enumerate() {
                    if !k.is_zero() {
                        out[c] = out[c].clone() + w.clone() * F::from_gaussian(k);
                    }
                }
            }
        }
        out
    }

    /// `B[a][b] = l[Z_a, Z_b]`, so that `l[x, y] = xᵀ B y`.
    pub fn form_matrix<F: Field>(&self, l: &[F]) -> Vec<Vec<F>> {
        let big = self.dim();
        (0..big)
            .map(|a| {
                (0..big)
                    .map(|b| {
                        self.consts[a][b]
                            .iter()
                            .zip(l)
                            .filter(|(k, _)| !k.is_zero())
                            .fold(F::zero(), |acc, (k, x)| acc + F::from_gaussian(k) * x.clone())
                    })
                    .collect()
            })
            .collect()
    }

    /// `l[x, y]`
    pub fn pair<F: Field>(&self, l: &[F], x: &[F], y: &[F]) -> F {
        linalg::dot(l, &self.bracket(x, y))
    }

    /// `conj(Σ x_a Z_a) = Σ conj(x_a) Z_{σ(a)}`
    pub fn conj<F: Field>(&self, x: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); x.len()];
        for (a, c) in x.iter().enumerate() {
            out[self.sigma[a]] = c.conj();
        }
        out
    }

    /// `Re Z_a = (Z_a + Z_{σ(a)})/2`
    pub fn re_part<F: Field>(&self, a: usize) -> Vec<F> {
        let big = self.dim();
        let s = self.sigma[a];
        if s == a {
            return linalg::unit(a, big);
        }
        let half = F::from_gaussian(&GR::real(Rational::new(1.into(), 2.into())));
        let mut v = vec![F::zero(); big];
        v[a] = half.clone();
        v[s] = half;
        v
    }

    /// `Im Z_a = (Z_a − Z_{σ(a)})/(2i)`
    pub fn im_part<F: Field>(&self, a: usize) -> Vec<F> {
        let big = self.dim();
        let s = self.sigma[a];
        let mut v = vec![F::zero(); big];
        if s == a {
            return v;
        }
        // 1/(2i) = -i/2
        let c = F::from_gaussian(&GR::new(Rational::zero(), Rational::new((-1).into(), 2.into())));
        v[a] = c.clone();
        v[s] = -c;
        v
    }

    /// `γ_a(X) = Σ_t X_{n+t} γ_a(A_t)`
    pub fn gamma<F: Field>(&self, a: usize, x: &[F]) -> F {
        (0..self.r).fold(F::zero(), |acc, t| acc + F::from_gaussian(&self.weights[a][t]) * x[self.n + t].clone())
    }

    /// `j ∈ I`, i.e. `c_j` is self-conjugate (`j` counts basis vectors).
    pub fn in_i(&self, j: usize) -> bool {
        self.self_conj[j]
    }

    pub fn trace_ad_h(&self) -> Vec<GR> {
        (0..self.r).map(|t| (0..self.n).fold(GR::zero(), |acc, a| &acc + &self.weights[a][t])).collect()
    }
}

/// `build_adaptable_basis`: verifies the spec's hint if present, otherwise constructs one.
pub fn build_adaptable_basis(spec: &LieAlgebraSpec) -> Result<AdaptableBasis> {
    match &spec.hint {
        Some(h) => AdaptableBasis::from_hint(spec, h),
        None => AdaptableBasis::construct(spec),
    }
}
