use num_traits::Zero;

use crate::arith::{Rational, GR};
use crate::basis::AdaptableBasis;
use crate::error::{Error, Result};
use crate::linalg::{self, Subspace};
use crate::stratification::LayerDescriptor;

/// `ν`, the stabilizer `k ⊆ h`, and a normalized basis of a complement `a`.
/// Elements of `h` are coordinate vectors against the `h` basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilizerData {
    /// `{1..n} \ e°`
    pub nu: Vec<usize>,
    /// `φ = {i_{s_1}, …, i_{s_r}}` from the generic layer of `g*`.
    pub phi: Vec<usize>,
    pub k: Subspace<Rational>,
    /// The complement basis before normalization.
    pub complement: Vec<Vec<Rational>>,
    /// `A_t` with `Re γ_{φ_s}(A_t) = δ_{st}`.
    pub normalized: Vec<Vec<Rational>>,
}

fn gamma_h(basis: &AdaptableBasis, j: usize, x: &[Rational]) -> GR {
    x.iter().zip(&basis.weights[j - 1]).fold(GR::zero(), |acc, (c, w)| &acc + &w.scale(c))
}

/// `k = ∩_{j∈ν} ker γ_j`, real and imaginary parts both.
pub fn stabilizer_subalgebra(basis: &AdaptableBasis, nu: &[usize]) -> Subspace<Rational> {
    let r = basis.r;
    let mut rows = Vec::new();
    for &j in nu {
        let w = &basis.weights[j - 1];
        rows.push(w.iter().map(|g| g.re.clone()).collect::<Vec<_>>());
        rows.push(w.iter().map(|g| g.im.clone()).collect::<Vec<_>>());
    }
    if rows.is_empty() {
        return Subspace::full(r);
    }
    Subspace::span(linalg::kernel(&rows, r), r)
}

pub fn stabilizer_data(
    basis: &AdaptableBasis,
    n_layer: &LayerDescriptor,
    g_layer: &LayerDescriptor,
) -> Result<StabilizerData> {
    let r = basis.r;
    let nu: Vec<usize> = (1..=basis.n).filter(|j| !n_layer.e.contains(j)).collect();
    let k = stabilizer_subalgebra(basis, &nu);
    let units: Vec<Vec<Rational>> = (0..r).map(|t| linalg::unit(t, r)).collect();
    let complement = k.complement_in(&units);
    let phi = g_layer.phi.clone();
    if phi.len() != complement.len() {
        return Err(Error::NormalizationFailed);
    }
    let m: Vec<Vec<Rational>> =
        phi.iter().map(|&j| complement.iter().map(|c| gamma_h(basis, j, c).re).collect()).collect();
    let normalized = if phi.is_empty() {
        Vec::new()
    } else {
        let inv = linalg::inverse(&m).ok_or(Error::NormalizationFailed)?;
        (0..phi.len())
            .map(|t| {
                complement
                    .iter()
                    .enumerate()
                    .fold(vec![Rational::zero(); r], |acc, (u, c)| linalg::axpy(&acc, &inv[u][t], c))
            })
            .collect()
    };
    Ok(StabilizerData { nu, phi, k, complement, normalized })
}

impl StabilizerData {
    /// `γ_j(A)` for `A` given in `h` coordinates.
    pub fn gamma(&self, basis: &AdaptableBasis, j: usize, a: &[Rational]) -> GR {
        gamma_h(basis, j, a)
    }

    pub fn k_dim(&self) -> usize {
        self.k.dim()
    }
}
