use num_traits::Zero;

use crate::algebra::{ad_matrix, LieAlgebraSpec};
use crate::arith::Rational;
use crate::linalg::{self, Subspace};

/// Center of `g` and its intersection with `h`, in real coordinates of `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct CenterData {
    pub z_g: Subspace<Rational>,
    pub z_cap_h: Subspace<Rational>,
}

impl CenterData {
    pub fn dim_z_cap_h(&self) -> usize {
        self.z_cap_h.dim()
    }
}

/// `z(g) = {W : [W, e_b] = 0 for every basis vector e_b}`.
pub fn center_data(spec: &LieAlgebraSpec) -> CenterData {
    let d = spec.dim();
    let mut rows = Vec::new();
    for b in 0..d {
        for c in 0..d {
            let row: Vec<Rational> = (0..d).map(|a| spec.bracket_basis(a, b)[c].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let z_g = Subspace::span(linalg::kernel(&rows, d), d);
    let h = Subspace::span((spec.n()..d).map(|k| linalg::unit(k, d)).collect::<Vec<_>>(), d);
    let z_cap_h = z_g.intersect(&h);
    CenterData { z_g, z_cap_h }
}

/// `tr ad W` for every basis vector, `n` first.
pub fn trace_table(spec: &LieAlgebraSpec) -> Vec<Rational> {
    let d = spec.dim();
    (0..d)
        .map(|k| {
            let m = ad_matrix(spec, &linalg::unit(k, d));
            (0..d).fold(Rational::zero(), |acc, i| acc + &m[i][i])
        })
        .collect()
}

/// Unimodular iff every `tr ad W` vanishes.
pub fn is_unimodular(spec: &LieAlgebraSpec) -> (bool, Vec<Rational>) {
    let t = trace_table(spec);
    (t.iter().all(Zero::is_zero), t)
}
