//! Points of `g*` and the coadjoint action `(g·l)(X) = l(Ad_{g⁻¹} X)`.
//!
//! A functional is stored by its values `l(Z_a)` on the adaptable basis.
//! It comes from a real functional exactly when `l(Z_{σ(a)}) = conj(l(Z_a))`.

use std::ops::{Deref, DerefMut};

use num_traits::Zero;
use twofloat::TwoFloat;

use crate::arith::{Rational, GR};
use crate::basis::AdaptableBasis;
use crate::error::{Error, Result};
use crate::field::{Cf, Field};
use crate::linalg;

#[derive(Clone, Debug, PartialEq)]
pub struct Functional<F>(pub Vec<F>);

impl<F> Deref for Functional<F> {
    type Target = Vec<F>;
    fn deref(&self) -> &Vec<F> {
        &self.0
    }
}

impl<F> DerefMut for Functional<F> {
    fn deref_mut(&mut self) -> &mut Vec<F> {
        &mut self.0
    }
}

impl<F: Field> Functional<F> {
    pub fn zero(dim: usize) -> Self {
        Functional(vec![F::zero(); dim])
    }

    /// Reality constraint `l(Z_{σ(a)}) = conj(l(Z_a))`.
    pub fn is_real(&self, basis: &AdaptableBasis) -> bool {
        self.0.iter().enumerate().all(|(a, x)| (self.0[basis.sigma[a]].clone() - x.conj()).is_zero())
    }

    /// Values on `n` only, i.e. the restriction `π(l) ∈ n*`.
    pub fn restrict(&self, n: usize) -> Self {
        Functional(self.0[..n].to_vec())
    }

    /// Extends an `n*` functional by zero on `h`.
    pub fn extend(&self, dim: usize) -> Self {
        let mut v = self.0.clone();
        v.resize(dim, F::zero());
        Functional(v)
    }
}

impl Functional<GR> {
    pub fn to_cf(&self) -> Functional<Cf> {
        Functional(self.0.iter().map(Cf::from_gaussian).collect())
    }
}

/// `exp(X)·l` for `X ∈ n` (adaptable coordinates), exactly:
/// `l′(Z_a) = Σ_k l((−ad X)^k Z_a)/k!`, a finite sum because `ad X` is nilpotent.
pub fn exp_unipotent_coadjoint<F: Field>(basis: &AdaptableBasis, x: &[F], l: &Functional<F>) -> Result<Functional<F>> {
    let big = basis.dim();
    if x[basis.n..].iter().any(|c| !c.is_zero()) {
        return Err(Error::NotUnipotent);
    }
    let neg_x: Vec<F> = x.iter().map(|c| -c.clone()).collect();
    let mut out = Vec::with_capacity(big);
    for a in 0..big {
        let mut term: Vec<F> = linalg::unit(a, big);
        let mut acc = l[a].clone();
        for k in 1..=big {
            term = basis.bracket(&neg_x, &term);
            let kf = F::from_i64(k as i64);
            term = term.into_iter().map(|c| c / kf.clone()).collect();
            if linalg::is_zero_vec(&term) {
                break;
            }
            acc = acc + linalg::dot(l, &term);
        }
        out.push(acc);
    }
    Ok(Functional(out))
}

fn require_in_h<F: Field>(basis: &AdaptableBasis, a: &[F]) -> Result<()> {
    if a[..basis.n].iter().any(|c| !c.is_zero()) {
        return Err(Error::HypothesisViolation("flow generator is not in h".into()));
    }
    Ok(())
}

/// `μ_v(A)` for each joint eigenvector `w_v`.
fn eigen_rates<F: Field>(basis: &AdaptableBasis, a: &[F]) -> Vec<F> {
    basis
        .eigweights
        .iter()
        .map(|w| (0..basis.r).fold(F::zero(), |acc, t| acc + F::from_gaussian(&w[t]) * a[basis.n + t].clone()))
        .collect()
}

/// `exp(A)·l` for `A ∈ h`, exactly. Only possible when `l` vanishes on every
/// eigenvector that the flow actually moves; otherwise `NEEDS_FLOAT`.
pub fn exp_h_coadjoint_exact(basis: &AdaptableBasis, a: &[Rational], l: &Functional<GR>) -> Result<Functional<GR>> {
    let a: Vec<GR> = a.iter().cloned().map(GR::real).collect();
    require_in_h(basis, &a)?;
    for (w, mu) in basis.eigvecs.iter().zip(eigen_rates(basis, &a)) {
        if !mu.is_zero() && !linalg::dot(w, l).is_zero() {
            return Err(Error::NeedsFloat);
        }
    }
    Ok(l.clone())
}

/// `exp(A)·l` for `A ∈ h` in double-double precision:
/// on a joint eigenvector `w_v`, `(exp(A)·l)(w_v) = e^{−μ_v(A)} l(w_v)`.
pub fn exp_h_coadjoint_float(basis: &AdaptableBasis, a: &[TwoFloat], l: &Functional<Cf>) -> Result<Functional<Cf>> {
    let big = basis.dim();
    let a: Vec<Cf> = a.iter().map(|&x| Cf::new(x, TwoFloat::from(0.0))).collect();
    require_in_h(basis, &a)?;
    let rates = eigen_rates(basis, &a);
    let moved: Vec<Cf> = basis
        .eigvecs
        .iter()
        .zip(&rates)
        .map(|(w, mu)| {
            let val = w.iter().zip(l.iter()).fold(Cf::zero(), |acc, (p, x)| acc + Cf::from_gaussian(p) * *x);
            (-*mu).exp() * val
        })
        .collect();
    let q = eigen_inverse(basis);
    Ok(Functional((0..big).map(|i| (0..big).fold(Cf::zero(), |acc, v| acc + q[i][v] * moved[v])).collect()))
}

/// `Q = P⁻¹` for the eigenvector matrix `P` (rows `w_v`), so that `Z_a = Σ_v Q[a][v] w_v`.
fn eigen_inverse(basis: &AdaptableBasis) -> Vec<Vec<Cf>> {
    let p = &basis.eigvecs;
    let inv = linalg::inverse(p).expect("joint eigenvectors form a basis");
    inv.iter().map(|row| row.iter().map(Cf::from_gaussian).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SpecBuilder;
    use crate::arith::int;
    use crate::basis::build_adaptable_basis;
    use crate::field::tf;

    fn heis_ext() -> AdaptableBasis {
        let mut b = SpecBuilder::new("ex", vec!["Z", "Y", "X"], vec!["A", "B"]).unwrap();
        b.bracket("X", "Y", &[("1", "Z")]).unwrap();
        b.bracket("A", "X", &[("1/2", "X")]).unwrap();
        b.bracket("A", "Y", &[("1/2", "Y")]).unwrap();
        b.bracket("A", "Z", &[("1", "Z")]).unwrap();
        build_adaptable_basis(&b.build()).unwrap()
    }

    fn gr(xs: &[i64]) -> Vec<GR> {
        xs.iter().map(|&x| GR::from(x)).collect()
    }

    #[test]
    fn unipotent_flow_in_heisenberg() {
        let ab = heis_ext();
        assert_eq!(ab.labels[..3], ["Z", "Y", "X"]);
        let l = Functional(gr(&[5, 0, 0, 0, 0]));
        let t = 3;
        let moved = exp_unipotent_coadjoint(&ab, &gr(&[0, 0, t, 0, 0]), &l).unwrap();
        // l′(Y) = l(Y − t[X,Y]) = −t z
        assert_eq!(moved[1], GR::from(-t * 5));
        assert_eq!(moved[0], GR::from(5));
        let back = exp_unipotent_coadjoint(&ab, &gr(&[0, 0, -t, 0, 0]), &moved).unwrap();
        assert_eq!(back, l);
        assert_eq!(exp_unipotent_coadjoint(&ab, &gr(&[0, 0, 0, 1, 0]), &l), Err(Error::NotUnipotent));
    }

    #[test]
    fn h_flow_scales_by_the_weight() {
        let ab = heis_ext();
        let l = Functional(gr(&[1, 0, 0, 0, 0])).to_cf();
        let t = 0.7;
        let out = exp_h_coadjoint_float(&ab, &[tf(0.0), tf(0.0), tf(0.0), tf(t), tf(0.0)], &l).unwrap();
        assert!((out[0].re.hi() - (-t).exp()).abs() < 1e-15);
        assert!(out[1].abs_f64() < 1e-15);
        let exact = Functional(gr(&[1, 0, 0, 0, 0]));
        let zero = vec![int(0); 5];
        assert_eq!(exp_h_coadjoint_exact(&ab, &zero, &exact).unwrap(), exact);
        let mut b_dir = zero.clone();
        b_dir[4] = int(3);
        assert_eq!(exp_h_coadjoint_exact(&ab, &b_dir, &exact).unwrap(), exact);
        let mut a_dir = zero;
        a_dir[3] = int(1);
        assert_eq!(exp_h_coadjoint_exact(&ab, &a_dir, &exact), Err(Error::NeedsFloat));
    }
}
