//! Joint eigenspaces of the commuting operators `ad A_t` on `n_C`.

use num_traits::Zero;

use crate::algebra::{ad_h_on_n, LieAlgebraSpec};
use crate::arith::{Rational, GR};
use crate::error::{Error, Result};
use crate::linalg::{self, Subspace};
use crate::poly::{char_poly, gaussian_rational_roots};

/// A joint eigenspace of `ad h` in `n_C`, in `n`-coordinates.
#[derive(Clone, Debug)]
pub struct WeightSpace {
    /// `γ(A_t)` for each `t`.
    pub weight: Vec<GR>,
    pub space: Subspace<GR>,
}

impl WeightSpace {
    /// The real `α` with `Im γ = α · Re γ`, if the weight factors that way.
    pub fn alpha(&self) -> Option<Rational> {
        weight_alpha(&self.weight)
    }
}

pub fn weight_alpha(w: &[GR]) -> Option<Rational> {
    let Some(t) = w.iter().position(|g| !g.re.is_zero()) else {
        return w.iter().all(|g| g.im.is_zero()).then(Rational::zero);
    };
    let alpha = &w[t].im / &w[t].re;
    w.iter().all(|g| g.im == &alpha * &g.re).then_some(alpha)
}

pub fn fmt_weight(w: &[GR], h_names: &[String]) -> String {
    let parts: Vec<String> = w.iter().zip(h_names).map(|(g, a)| format!("{a}↦{g}")).collect();
    format!("({})", parts.join(", "))
}

fn cmp_gr(a: &GR, b: &GR) -> std::cmp::Ordering {
    a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im))
}

/// Eigenvalues of a rational matrix, all of which must lie in `Q(i)`.
pub fn eigenvalues(m: &[Vec<Rational>]) -> Result<Vec<GR>> {
    gaussian_rational_roots(&char_poly(m)).map_err(|_| Error::EigenNotGaussianRational)
}

/// Splits `n_C` into joint weight spaces, sorted by weight.
pub fn weight_decomposition(spec: &LieAlgebraSpec) -> Result<Vec<WeightSpace>> {
    let n = spec.n();
    let mut spaces = vec![WeightSpace { weight: vec![], space: Subspace::full(n) }];
    for t in 0..spec.r() {
        let m = ad_h_on_n(spec, t);
        let roots = eigenvalues(&m)?;
        let mut next = Vec::new();
        for mu in &roots {
            let shifted: Vec<Vec<GR>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let x = GR::real(m[i][j].clone());
                            if i == j {
                                &x - mu
                            } else {
                                x
                            }
                        })
                        .collect()
                })
                .collect();
            let eig = Subspace::span(linalg::kernel(&shifted, n), n);
            for ws in &spaces {
                let cut = ws.space.intersect(&eig);
                if cut.dim() > 0 {
                    let mut weight = ws.weight.clone();
                    weight.push(mu.clone());
                    next.push(WeightSpace { weight, space: cut });
                }
            }
        }
        spaces = next;
    }
    if spaces.iter().map(|w| w.space.dim()).sum::<usize>() < n {
        return Err(Error::NotDiagonalizable);
    }
    spaces.sort_by(|a, b| {
        a.weight
            .iter()
            .zip(&b.weight)
            .map(|(x, y)| cmp_gr(x, y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(spaces)
}

/// Weight of an eigenvector `v ∈ n_C` (real coordinates of `n`), or `None`.
pub fn weight_of(spec: &LieAlgebraSpec, v: &[GR]) -> Option<Vec<GR>> {
    let n = spec.n();
    let k = v.iter().position(|x| !x.is_zero())?;
    let mut w = Vec::new();
    for t in 0..spec.r() {
        let m = ad_h_on_n(spec, t);
        let img: Vec<GR> = (0..n).map(|i| (0..n).fold(GR::zero(), |acc, j| &acc + &v[j].scale(&m[i][j]))).collect();
        let mu = &img[k] / &v[k];
        if img.iter().zip(v).any(|(a, b)| *a != &mu * b) {
            return None;
        }
        w.push(mu);
    }
    Some(w)
}
