use crate::basis::AdaptableBasis;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg;

use super::{JumpData, KCase, LayerDescriptor};

/// `V_k(l)`, `U_k(l)`, `Z_{i_k}(l)`, `Z_{j_k}(l)` at one point, `k` stored 0-based.
#[derive(Clone, Debug)]
pub struct SectionVectors<F> {
    pub v: Vec<Vec<F>>,
    pub u: Vec<Vec<F>>,
    pub z_i: Vec<Vec<F>>,
    pub z_j: Vec<Vec<F>>,
    pub beta: Vec<(F, F)>,
    pub alpha: Vec<(F, F)>,
    /// `l[V_k, U_k]`
    pub pairing: Vec<F>,
    l: Vec<F>,
}

impl<F: Field> SectionVectors<F> {
    /// `ρ_k(z, l)`; `ρ_0` is the identity.
    pub fn rho(&self, basis: &AdaptableBasis, k: usize, z: &[F]) -> Vec<F> {
        rho_with(basis, &self.l, &self.v[..k], &self.u[..k], &self.pairing[..k], z)
    }

    /// `φ(l) = {i_k : γ_{i_k}(U_k(l)) ≠ 0}`
    pub fn phi(&self, basis: &AdaptableBasis, jump: &JumpData<F>) -> Vec<usize> {
        jump.i.iter().zip(&self.u).filter(|(&ik, u)| !basis.gamma(ik - 1, u).is_zero()).map(|(&ik, _)| ik).collect()
    }

    /// `b_{i_k}(l) = γ_{i_k}(U_k) / l[Z_{i_k}, U_k]`, for `k` (1-based) with `i_k ∈ φ`.
    pub fn b(&self, basis: &AdaptableBasis, jump: &JumpData<F>, k: usize) -> Result<F> {
        let ik = jump.i[k - 1];
        let u = &self.u[k - 1];
        let den = basis.pair(&self.l, &linalg::unit(ik - 1, basis.dim()), u);
        if den.is_zero() {
            return Err(Error::DivisionByZero(format!("l[Z_{ik}, U_{k}] = 0")));
        }
        Ok(basis.gamma(ik - 1, u) / den)
    }
}

fn rho_with<F: Field>(basis: &AdaptableBasis, l: &[F], v: &[Vec<F>], u: &[Vec<F>], d: &[F], z: &[F]) -> Vec<F> {
    let mut out = z.to_vec();
    for ((vm, um), dm) in v.iter().zip(u).zip(d) {
        // l[U, V] = -l[V, U]
        let cu = basis.pair(l, &out, um) / dm.clone();
        let cv = basis.pair(l, &out, vm) / (-dm.clone());
        out = linalg::axpy(&out, &(-cu), vm);
        out = linalg::axpy(&out, &(-cv), um);
    }
    out
}

fn combo<F: Field>(basis: &AdaptableBasis, a: usize, c: &(F, F)) -> Vec<F> {
    let re = basis.re_part::<F>(a);
    let im = basis.im_part::<F>(a);
    linalg::add(&linalg::scale(&c.0, &re), &linalg::scale(&c.1, &im))
}

/// Cases (a)–(e) and the `ρ` recursion, at the point `l`.
pub fn section_vectors<F: Field>(
    basis: &AdaptableBasis,
    l: &[F],
    jump: &JumpData<F>,
    layer: &LayerDescriptor,
) -> Result<SectionVectors<F>> {
    let big = basis.dim();
    let mut sv = SectionVectors {
        v: Vec::new(),
        u: Vec::new(),
        z_i: Vec::new(),
        z_j: Vec::new(),
        beta: Vec::new(),
        alpha: Vec::new(),
        pairing: Vec::new(),
        l: l.to_vec(),
    };
    for k in 0..jump.d() {
        let (ik, jk) = (jump.i[k] - 1, jump.j[k] - 1);
        let case = layer.cases[k]
            .ok_or_else(|| Error::UnsupportedCase(format!("i_{} = {} lies in no K set", k + 1, ik + 1)))?;
        let beta = match case {
            KCase::K0 => (F::one(), F::zero()),
            KCase::K1 => {
                let r = sv.rho(basis, k, &linalg::unit(jk, big));
                (basis.pair(l, &r, &basis.re_part(ik)), basis.pair(l, &r, &basis.im_part(ik)))
            }
            KCase::K2 => {
                let m = jump.j.iter().position(|&x| x == ik).filter(|&m| m < k).ok_or_else(|| {
                    Error::UnsupportedCase(format!("K_2 index {} has no earlier j_m = i_k - 1", k + 1))
                })?;
                let (a1, a2) = sv.alpha[m].clone();
                (-a2, -a1)
            }
            KCase::K3 => (F::zero(), F::one()),
            KCase::K4 => {
                let next = jump.j.get(k + 1).map(|x| x - 1);
                if next != Some(basis.sigma[jk]) {
                    return Err(Error::UnsupportedCase(format!(
                        "K_4 index {} without Z_(j_{}) = conj(Z_(j_{}))",
                        k + 1,
                        k + 2,
                        k + 1
                    )));
                }
                (F::one(), F::zero())
            }
            KCase::K5 => {
                if k == 0 || layer.cases[k - 1] != Some(KCase::K4) {
                    return Err(Error::UnsupportedCase(format!("K_5 index {} not preceded by K_4", k + 1)));
                }
                let prev = jump.i[k - 1] - 1;
                let up = &sv.u[k - 1];
                let den = basis.pair(l, up, &basis.re_part(prev));
                if den.is_zero() {
                    return Err(Error::DivisionByZero(format!("l[U_{}, Re Z_(i_{})] = 0", k, k)));
                }
                (-(basis.pair(l, up, &basis.im_part(prev)) / den), -F::one())
            }
        };
        let z_i = combo(basis, ik, &beta);
        let v = sv.rho(basis, k, &z_i);
        let alpha = (basis.pair(l, &basis.re_part(jk), &v), basis.pair(l, &basis.im_part(jk), &v));
        let z_j = combo(basis, jk, &alpha);
        let u = sv.rho(basis, k, &z_j);
        let d = basis.pair(l, &v, &u);
        if d.is_zero() {
            return Err(Error::DivisionByZero(format!("l[V_{0}, U_{0}] = 0", k + 1)));
        }
        sv.beta.push(beta);
        sv.alpha.push(alpha);
        sv.z_i.push(z_i);
        sv.z_j.push(z_j);
        sv.v.push(v);
        sv.u.push(u);
        sv.pairing.push(d);
    }
    Ok(sv)
}
