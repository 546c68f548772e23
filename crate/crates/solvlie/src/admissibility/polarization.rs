use num_traits::Zero;

use crate::arith::{Rational, GR};
use crate::basis::AdaptableBasis;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::stratification::{jump_data, Ambient};

/// `p = h_{d°}(λ)` and the dimension data of `X ≅ n/e × e/d`.
#[derive(Clone, Debug)]
pub struct PolarizationData {
    pub p: Subspace<GR>,
    pub p_bar: Subspace<GR>,
    /// `e_C = p + p̄`
    pub e_c: Subspace<GR>,
    /// `d_C = p ∩ p̄`
    pub d_c: Subspace<GR>,
    pub dim_x: usize,
    pub real: bool,
    /// `iλ[X, X̄] ≥ 0` on `p`.
    pub positive: bool,
    pub sum_is_subalgebra: bool,
}

fn conj_space(basis: &AdaptableBasis, s: &Subspace<GR>) -> Subspace<GR> {
    Subspace::span(s.basis().iter().map(|v| basis.conj(v)).collect::<Vec<_>>(), s.ambient())
}

/// Exact positive-semidefiniteness of a Hermitian matrix by symmetric elimination.
fn hermitian_psd(mut m: Vec<Vec<GR>>) -> bool {
    let n = m.len();
    let mut alive: Vec<usize> = (0..n).collect();
    while !alive.is_empty() {
        let Some(pos) = alive.iter().position(|&i| !m[i][i].is_zero()) else {
            // zero diagonal: PSD only if the remaining block vanishes
            return alive.iter().all(|&i| alive.iter().all(|&j| m[i][j].is_zero()));
        };
        let p = alive.remove(pos);
        let piv = m[p][p].re.clone();
        if piv < Rational::zero() {
            return false;
        }
        for &i in &alive {
            let f = &m[i][p] / &m[p][p];
            for &j in &alive {
                let sub = &f * &m[p][j];
                m[i][j] = &m[i][j] - &sub;
            }
        }
    }
    true
}

pub fn polarization_data(basis: &AdaptableBasis, lambda: &[GR]) -> Result<PolarizationData> {
    let n = basis.n;
    let jump = jump_data(basis, lambda, Ambient::N);
    let p = jump.last().clone();
    for x in p.basis() {
        for y in p.basis() {
            if !basis.pair(lambda, x, y).is_zero() {
                return Err(Error::IsotropyFail);
            }
        }
    }
    let p_bar = conj_space(basis, &p);
    let e_c = p.sum(&p_bar);
    let d_c = p.intersect(&p_bar);
    let sum_is_subalgebra = e_c.basis().iter().all(|x| e_c.basis().iter().all(|y| e_c.contains(&basis.bracket(x, y))));
    let spread = e_c.dim() - d_c.dim();
    debug_assert!(spread % 2 == 0);
    let dim_x = (n - e_c.dim()) + spread / 2;
    let herm: Vec<Vec<GR>> = p
        .basis()
        .iter()
        .map(|x| p.basis().iter().map(|y| &GR::i() * &basis.pair(lambda, x, &basis.conj(y))).collect())
        .collect();
    Ok(PolarizationData {
        real: p == p_bar,
        positive: hermitian_psd(herm),
        p,
        p_bar,
        e_c,
        d_c,
        dim_x,
        sum_is_subalgebra,
    })
}

impl PolarizationData {
    /// `dim_R e_alg`, with `e_alg = e_C ∩ n`.
    pub fn dim_e(&self) -> usize {
        self.e_c.dim()
    }

    /// `dim_R d_alg`, with `d_alg = p ∩ n`.
    pub fn dim_d(&self) -> usize {
        self.d_c.dim()
    }
}
