use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::arith::{Rational, GR};
use crate::basis::AdaptableBasis;
use crate::linalg::{self, Subspace};
use crate::orbits::StabilizerData;

use super::PolarizationData;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multiplicity {
    Finite(u64),
    Infinite,
}

impl Multiplicity {
    pub fn is_finite(self) -> bool {
        matches!(self, Multiplicity::Finite(_))
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(m) => write!(f, "{m}"),
            Multiplicity::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Multiplicity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Multiplicity::Finite(m) => s.serialize_u64(*m),
            Multiplicity::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// The `k`-weights of `X ≅ n/e × e/d`, one row per coordinate of `X`.
///
/// `K` fixes `λ`, so it preserves the polarizing flag and with it `p`, `p̄`
/// and `e_C`. Each of these splits along the restricted weights `μ = γ|_k`,
/// and `X` carries `μ` with multiplicity
/// `dim W_μ/(e_C ∩ W_μ) + dim (p ∩ W_μ)/(p ∩ p̄ ∩ W_μ)`.
pub fn x_weights(basis: &AdaptableBasis, stab: &StabilizerData, pol: &PolarizationData) -> Vec<Vec<GR>> {
    let amb = pol.p.ambient();
    let k_basis = stab.k.basis();
    let restrict = |w: &[GR]| -> Vec<GR> {
        k_basis.iter().map(|a| a.iter().zip(w).fold(GR::zero(), |acc, (c, g)| &acc + &g.scale(c))).collect()
    };
    let mut groups: Vec<(Vec<GR>, Vec<Vec<GR>>)> = Vec::new();
    for (v, w) in basis.eigvecs.iter().zip(&basis.eigweights).take(basis.n) {
        let mu = restrict(w);
        let mut v = v.clone();
        v.resize(amb, GR::zero());
        match groups.iter_mut().find(|(m, _)| *m == mu) {
            Some((_, vs)) => vs.push(v),
            None => groups.push((mu, vec![v])),
        }
    }
    let mut rows = Vec::new();
    for (mu, vs) in groups {
        let w = Subspace::span(vs, amb);
        let count = (w.dim() - pol.e_c.intersect(&w).dim()) + (pol.p.intersect(&w).dim() - pol.d_c.intersect(&w).dim());
        rows.extend(std::iter::repeat(mu).take(count));
    }
    rows
}

/// `2^{dim X}` when `K` acts on `X` with real weights of full rank, infinite otherwise.
pub fn multiplicity(basis: &AdaptableBasis, stab: &StabilizerData, pol: &PolarizationData) -> Multiplicity {
    if stab.k_dim() == 0 {
        return Multiplicity::Infinite;
    }
    let rows = x_weights(basis, stab, pol);
    debug_assert_eq!(rows.len(), pol.dim_x);
    if rows.iter().flatten().any(|g| !g.im.is_zero()) {
        return Multiplicity::Infinite;
    }
    let re: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|g| g.re.clone()).collect()).collect();
    if linalg::rank(&re) == pol.dim_x {
        Multiplicity::Finite(1u64 << pol.dim_x)
    } else {
        Multiplicity::Infinite
    }
}
