use twofloat::TwoFloat;

use crate::basis::AdaptableBasis;
use crate::error::{Error, Result};
use crate::field::{dd_ln, rational_to_tf, tf, Cf};
use crate::functional::{exp_h_coadjoint_float, Functional};

use super::{SectionOracle, StabilizerData};

#[derive(Clone, Debug)]
pub struct HProjection {
    /// `X ∈ a` in `h` coordinates, with `exp(X)·f = σ`.
    pub h_params: Vec<f64>,
    pub sigma: Functional<Cf>,
    pub iterations: usize,
}

/// Moves `f ∈ Λ_ν` along `H` onto `Σ°`.
///
/// With `X = Σ s_t A_t` the flow scales `f(Z_{φ_t})` by `e^{-γ_{φ_t}(X)}` to
/// leading order, so `s_t = ln|f(Z_{φ_t})|` solves the modulus conditions.
/// Lower-order flag terms are absorbed by repeating the correction.
pub fn h_project(
    basis: &AdaptableBasis,
    lambda_nu: &SectionOracle,
    stab: &StabilizerData,
    f: &Functional<Cf>,
    tol: f64,
) -> Result<HProjection> {
    let mut f = f.clone();
    f.resize(basis.dim(), Cf::from_f64(0.0, 0.0));
    if !lambda_nu.contains(basis, &f, tol) {
        return Err(Error::NotInLambdaNu);
    }
    let big = basis.dim();
    let mut total = vec![tf(0.0); basis.r];
    let mut sigma = f.clone();
    for it in 0..64 {
        let s: Vec<TwoFloat> = stab.phi.iter().map(|&j| dd_ln(sigma[j - 1].abs())).collect();
        let worst = s.iter().map(|x| x.hi().abs()).fold(0.0, f64::max);
        if worst <= tol * 1e-3 || (it > 0 && worst <= tol) {
            return Ok(HProjection {
                h_params: total.iter().map(|x| x.hi() + x.lo()).collect(),
                sigma,
                iterations: it,
            });
        }
        let mut x = vec![tf(0.0); basis.r];
        for (st, a) in s.iter().zip(&stab.normalized) {
            for (xu, au) in x.iter_mut().zip(a) {
                *xu += *st * rational_to_tf(au);
            }
        }
        for (t, xu) in total.iter_mut().zip(&x) {
            *t += *xu;
        }
        let mut full = vec![tf(0.0); big];
        full[basis.n..].copy_from_slice(&x);
        sigma = exp_h_coadjoint_float(basis, &full, &sigma)?;
    }
    Err(Error::NormalizationFailed)
}
