use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::Analysis;
use crate::arith::{int, rational_to_f64};
use crate::error::{Error, Result};
use crate::field::Cf;
use crate::orbits::Constraint;
use crate::pfaffian::plancherel_pfaffian;

/// Largest accepted relative standard error of `r_1/r_2`.
pub const MAX_REL_STD_ERR: f64 = 0.01;

/// `exp(-1/(1-u²))` with `u = (x - centre)/width`, applied to every `ν` coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BumpFunction {
    pub centre: f64,
    pub width: f64,
}

impl BumpFunction {
    pub fn eval(&self, x: f64) -> f64 {
        let u = (x - self.centre) / self.width;
        if u.abs() >= 1.0 {
            0.0
        } else {
            (-1.0 / (1.0 - u * u)).exp()
        }
    }

    fn interval(&self) -> (f64, f64) {
        (self.centre - self.width, self.centre + self.width)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DisintegrationReport {
    pub samples: usize,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
    /// `r_i = lhs_i / rhs_i`
    pub r: [f64; 2],
    pub ratio: f64,
    pub rel_std_err: f64,
}

#[derive(Default)]
struct Acc {
    sum: f64,
    sq: f64,
}

impl Acc {
    fn push(&mut self, x: f64) {
        self.sum += x;
        self.sq += x * x;
    }

    /// `(estimate, standard error)` of `vol · E[x]`.
    fn finish(&self, n: usize, vol: f64) -> (f64, f64) {
        let nf = n as f64;
        let mean = self.sum / nf;
        let var = (self.sq / nf - mean * mean).max(0.0);
        (vol * mean, vol * (var / nf).sqrt())
    }
}

/// Monte-Carlo comparison of both sides of the Plancherel disintegration
///
/// `∫_{Λ_ν} F|Pf| df = ∫_{Σ°} ∫_{H/K} F(h̄·σ) Δ(h̄) dh̄ |Pf(σ)| dσ`
///
/// for two test functions, up to the one global constant the identity leaves open.
///
/// Supported when `Λ_ν` is cut out by plain vanishing conditions and `ν = φ`
/// consists of real coordinates, so `Σ° = {±1}^ν` and `h̄ = exp(Σ t_s A_s)`
/// acts on `σ` by `σ_s e^{-t_s}`. `Δ(exp X) = e^{-tr ad X}`. Both integrals are
/// sampled uniformly over the support of `F`, with shared uniform draws.
pub fn disintegration_check(
    analysis: &Analysis,
    test_functions: [BumpFunction; 2],
    mc_samples: usize,
    seed: u64,
) -> Result<DisintegrationReport> {
    let basis = &analysis.basis;
    let stab = &analysis.stabilizer;
    let e = &analysis.n_layer.layer.e;
    let unsupported = |m: &str| Err(Error::UnsupportedCase(format!("disintegration check: {m}")));
    if analysis.sections.lambda.constraints.iter().any(|c| !matches!(c, Constraint::Vanish { .. })) {
        return unsupported("Λ_ν is not a coordinate subspace");
    }
    let mut phi = stab.phi.clone();
    phi.sort_unstable();
    if phi != stab.nu || stab.nu.iter().any(|&j| basis.sigma[j - 1] != j - 1) {
        return unsupported("ν must equal φ and consist of real coordinates");
    }
    for f in &test_functions {
        let (a, b) = f.interval();
        if a <= 0.0 && b >= 0.0 || f.width <= 0.0 {
            return unsupported("test function support must avoid 0");
        }
    }
    let d = stab.phi.len();
    let big = basis.dim();
    // tr ad A_s over g, and the weights γ_{φ_s}(A_t), real by assumption
    let traces: Vec<f64> = stab
        .normalized
        .iter()
        .map(|a| (0..basis.n).map(|j| rational_to_f64(&stab.gamma(basis, j + 1, a).re)).sum())
        .collect();
    for (s, &j) in stab.phi.iter().enumerate() {
        for (t, a) in stab.normalized.iter().enumerate() {
            let g = stab.gamma(basis, j, a);
            let want = int(if s == t { 1 } else { 0 });
            if !g.im.is_zero() || g.re != want {
                return unsupported("normalized complement does not act diagonally on φ");
            }
        }
    }

    let pf_abs = |vals: &[f64]| -> Result<f64> {
        let mut l = vec![Cf::zero(); big];
        for (&j, &x) in stab.phi.iter().zip(vals) {
            l[j - 1] = Cf::from_f64(x, 0.0);
        }
        Ok(plancherel_pfaffian(basis, &l, e)?.abs_f64())
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lhs_acc = [Acc::default(), Acc::default()];
    let mut rhs_acc = [Acc::default(), Acc::default()];
    let mut u = vec![0.0; d];
    let mut x = vec![0.0; d];
    let mut pf_sigma = [0.0; 2];
    let mut t_box = [(0.0, 0.0); 2];
    for (i, f) in test_functions.iter().enumerate() {
        let sign = f.centre.signum();
        pf_sigma[i] = pf_abs(&vec![sign; d])?;
        let (a, b) = f.interval();
        let (lo, hi) = if sign > 0.0 { (a, b) } else { (-b, -a) };
        t_box[i] = (-hi.ln(), -lo.ln());
    }
    for _ in 0..mc_samples {
        for v in u.iter_mut() {
            *v = rng.gen::<f64>();
        }
        for (i, f) in test_functions.iter().enumerate() {
            let (a, b) = f.interval();
            for (xs, us) in x.iter_mut().zip(&u) {
                *xs = a + (b - a) * us;
            }
            let fv: f64 = x.iter().map(|&v| f.eval(v)).product();
            lhs_acc[i].push(if fv == 0.0 { 0.0 } else { fv * pf_abs(&x)? });

            let (tl, th) = t_box[i];
            let sign = f.centre.signum();
            let mut fv = 1.0;
            let mut tr = 0.0;
            for (s, us) in u.iter().enumerate() {
                let t = tl + (th - tl) * us;
                fv *= f.eval(sign * (-t).exp());
                tr += t * traces[s];
            }
            rhs_acc[i].push(fv * (-tr).exp() * pf_sigma[i]);
        }
    }

    let mut lhs = [0.0; 2];
    let mut rhs = [0.0; 2];
    let mut r = [0.0; 2];
    let mut rel2 = 0.0;
    for i in 0..2 {
        let (a, b) = test_functions[i].interval();
        let (tl, th) = t_box[i];
        let (l, ls) = lhs_acc[i].finish(mc_samples, (b - a).powi(d as i32));
        let (h, hs) = rhs_acc[i].finish(mc_samples, (th - tl).powi(d as i32));
        lhs[i] = l;
        rhs[i] = h;
        r[i] = l / h;
        rel2 += (ls / l).powi(2) + (hs / h).powi(2);
    }
    let rel_std_err = rel2.sqrt();
    if !rel_std_err.is_finite() || rel_std_err > MAX_REL_STD_ERR {
        return Err(Error::McVarianceTooHigh(rel_std_err));
    }
    Ok(DisintegrationReport { samples: mc_samples, lhs, rhs, r, ratio: r[0] / r[1], rel_std_err })
}
