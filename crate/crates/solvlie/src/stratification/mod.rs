//! Jump indices, layers and the section vectors `V_k`, `U_k`, `Z_j(l)`.
//!
//! All indices exposed here are 1-based flag indices: `j` refers to `Z_j`,
//! the last vector of `c_j`. Internally vectors stay 0-based.

mod generic;
mod jump;
mod layer;
mod sections;

pub use generic::{generic_layer, random_functional, GenericLayer, SAMPLE_BOUND};
pub use jump::{jump_data, JumpData};
pub use layer::{layer_descriptor, KCase, LayerDescriptor};
pub use sections::{section_vectors, SectionVectors};

use serde::Serialize;

use crate::basis::AdaptableBasis;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{self, Matrix, Subspace};

/// Which flag the recursion runs over: `n_C` (giving `e°`) or all of `g_C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    N,
    G,
}

impl Ambient {
    pub fn dim(self, basis: &AdaptableBasis) -> usize {
        match self {
            Ambient::N => basis.n,
            Ambient::G => basis.dim(),
        }
    }
}

/// `[l[s_a, t_b]]` over the bases of `S` and `T`.
pub fn bilinear_form<F: Field>(basis: &AdaptableBasis, l: &[F], s: &Subspace<F>, t: &Subspace<F>) -> Matrix<F> {
    let b = basis.form_matrix(l);
    s.basis()
        .iter()
        .map(|x| {
            let row = covector(&b, x);
            t.basis().iter().map(|y| linalg::dot(&row, y)).collect()
        })
        .collect()
}

/// `s^l ∩ ambient = {Z ∈ ambient : l[s, Z] = 0 for all s ∈ S}`.
pub fn perp<F: Field>(basis: &AdaptableBasis, l: &[F], s: &Subspace<F>, ambient: &Subspace<F>) -> Subspace<F> {
    let m = bilinear_form(basis, l, s, ambient);
    let ker = linalg::kernel(&m, ambient.dim());
    Subspace::span(
        ker.iter().map(|c| combine(c, ambient.basis(), ambient.ambient())).collect::<Vec<_>>(),
        ambient.ambient(),
    )
}

/// `xᵀ B`, so that `l[x, y] = covector(B, x) · y`.
pub(crate) fn covector<F: Field>(b: &Matrix<F>, x: &[F]) -> Vec<F> {
    let mut out = linalg::zeros(b.len());
    for (a, c) in x.iter().enumerate() {
        if !c.is_zero() {
            out = linalg::axpy(&out, c, &b[a]);
        }
    }
    out
}

pub(crate) fn combine<F: Field>(c: &[F], rows: &[Vec<F>], ambient: usize) -> Vec<F> {
    let mut v = linalg::zeros(ambient);
    for (x, r) in c.iter().zip(rows) {
        if !x.is_zero() {
            v = linalg::axpy(&v, x, r);
        }
    }
    v
}

/// Jump data, layer and section vectors at one point.
#[derive(Clone, Debug)]
pub struct PointData<F> {
    pub jump: JumpData<F>,
    pub layer: LayerDescriptor,
    pub sections: SectionVectors<F>,
}

pub fn analyze_point<F: Field>(basis: &AdaptableBasis, l: &[F], ambient: Ambient) -> Result<PointData<F>> {
    let jump = jump_data(basis, l, ambient);
    let mut layer = LayerDescriptor::from_jump(basis, &jump);
    let sections = section_vectors(basis, l, &jump, &layer)?;
    layer.phi = sections.phi(basis, &jump);
    Ok(PointData { jump, layer, sections })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SpecBuilder;
    use crate::arith::GR;
    use crate::basis::build_adaptable_basis;

    fn heis() -> AdaptableBasis {
        let mut b = SpecBuilder::new("h", vec!["Z", "Y", "X"], vec![]).unwrap();
        b.bracket("X", "Y", &[("1", "Z")]).unwrap();
        build_adaptable_basis(&b.build()).unwrap()
    }

    #[test]
    fn heisenberg_form_and_perp() {
        let ab = heis();
        let l: Vec<GR> = vec![1.into(), 0.into(), 0.into()];
        let full = Subspace::full(3);
        let m = bilinear_form(&ab, &l, &full, &full);
        // [Y, X] = -Z and [X, Y] = Z
        assert_eq!(m[1][2], GR::from(-1));
        assert_eq!(m[2][1], GR::from(1));
        assert_eq!(linalg::rank(&m), 2);
        let x = Subspace::span([linalg::unit(2, 3)], 3);
        let p = perp(&ab, &l, &x, &full);
        assert_eq!(p, Subspace::span([linalg::unit(0, 3), linalg::unit(2, 3)], 3));
        let z = Subspace::span([linalg::unit(0, 3)], 3);
        assert_eq!(perp(&ab, &l, &z, &full), full);
    }
}
