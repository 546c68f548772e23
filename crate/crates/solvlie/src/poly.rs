//! Univariate polynomials over `Q` and their roots in `Q(i)`.
//!
//! Roots are located numerically on the square-free part, snapped to nearby
//! rationals by continued fractions, and then confirmed by exact evaluation.
//! A root that cannot be confirmed is reported as missing; nothing inexact
//! leaves this module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{rational_to_f64, Rational, GR};

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn monic(&self) -> Poly {
        match self.0.last() {
            Some(lead) => Poly(self.0.iter().map(|c| c / lead).collect()),
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.0.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer(BigInt::from(k))).collect())
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        let mut q = vec![Rational::zero(); self.0.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().unwrap() / &lead;
            for (i, c) in d.0.iter().enumerate() {
                r[k + i] -= &f * c;
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn eval_gr(&self, z: &GR) -> GR {
        let mut acc = GR::zero();
        for c in self.0.iter().rev() {
            acc = &acc * z + &GR::real(c.clone());
        }
        acc
    }
}

/// Characteristic polynomial `det(xI − M)` by the Faddeev–LeVerrier recursion.
pub fn char_poly(m: &[Vec<Rational>]) -> Poly {
    let n = m.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = M·M_{k−1} + c_{n−k+1}·I
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Rational::zero();
                for l in 0..n {
                    if !m[i][l].is_zero() && !mk[l][j].is_zero() {
                        s += &m[i][l] * &mk[l][j];
                    }
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        let mut tr = Rational::zero();
        for i in 0..n {
            for l in 0..n {
                if !m[i][l].is_zero() && !next[l][i].is_zero() {
                    tr += &m[i][l] * &next[l][i];
                }
            }
        }
        coeffs[n - k] = -tr / Rational::from_integer(BigInt::from(k));
        mk = next;
    }
    Poly::new(coeffs)
}

type C64 = (f64, f64);

fn cmul(a: C64, b: C64) -> C64 {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cdiv(a: C64, b: C64) -> C64 {
    let n = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
}

fn horner(c: &[f64], z: C64) -> C64 {
    c.iter().rev().fold((0.0, 0.0), |acc, &k| {
        let p = cmul(acc, z);
        (p.0 + k, p.1)
    })
}

/// Aberth–Ehrlich iteration on a monic polynomial with `f64` coefficients.
fn numeric_roots(c: &[f64]) -> Vec<C64> {
    let n = c.len() - 1;
    let bound = 1.0 + c[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            (0.5 * bound * t.cos(), 0.5 * bound * t.sin())
        })
        .collect();
    let dc: Vec<f64> = c.iter().enumerate().skip(1).map(|(k, x)| k as f64 * x).collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let p = horner(c, z[i]);
            let dp = horner(&dc, z[i]);
            if p.0 == 0.0 && p.1 == 0.0 {
                continue;
            }
            let ratio = cdiv(p, dp);
            let mut s = (0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = (z[i].0 - z[j].0, z[i].1 - z[j].1);
                    let inv = cdiv((1.0, 0.0), d);
                    s = (s.0 + inv.0, s.1 + inv.1);
                }
            }
            let denom = (1.0 - cmul(ratio, s).0, -cmul(ratio, s).1);
            let w = cdiv(ratio, denom);
            if w.0.is_finite() && w.1.is_finite() {
                z[i] = (z[i].0 - w.0, z[i].1 - w.1);
                moved = moved.max(w.0.hypot(w.1));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Continued-fraction convergents of `x` with denominators up to `max_den`.
fn convergents(x: f64, max_den: i64) -> Vec<Rational> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        let Some(ai) = a.to_i64() else { break };
        let ai = BigInt::from(ai);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2 > BigInt::from(max_den) {
            break;
        }
        out.push(Rational::new(h2.clone(), k2.clone()));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = y - a;
        if frac.abs() < 1e-13 {
            break;
        }
        y = 1.0 / frac;
    }
    out
}

/// Roots of `p` in `Q(i)`. `Err` carries the number of roots that could not be confirmed.
pub fn gaussian_rational_roots(p: &Poly) -> Result<Vec<GR>, usize> {
    let sf = p.squarefree();
    let Some(deg) = sf.degree() else { return Ok(vec![]) };
    if deg == 0 {
        return Ok(vec![]);
    }
    // Pull out the rational root 0 first; it is common and numerically awkward.
    let mut roots = Vec::new();
    let mut q = sf.clone();
    if q.0[0].is_zero() {
        roots.push(GR::zero());
        q = Poly::new(q.0[1..].to_vec());
    }
    if q.degree() == Some(0) {
        return Ok(roots);
    }
    // Integer-ish scaling keeps the float image well conditioned.
    let den_lcm = q.0.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let scaled: Vec<f64> =
        q.0.iter().map(|c| rational_to_f64(&(c * Rational::from_integer(den_lcm.clone())))).collect();
    let lead = *scaled.last().unwrap();
    let monic: Vec<f64> = scaled.iter().map(|x| x / lead).collect();
    for z in numeric_roots(&monic) {
        let res = convergents(z.0, 1_000_000);
        let ims = convergents(z.1, 1_000_000);
        let re_c: Vec<Rational> = res.into_iter().rev().take(4).collect();
        let im_c: Vec<Rational> =
            if z.1.abs() < 1e-9 { vec![Rational::zero()] } else { ims.into_iter().rev().take(4).collect() };
        'search: for a in &re_c {
            for b in &im_c {
                let cand = GR::new(a.clone(), b.clone());
                if !roots.contains(&cand) && q.eval_gr(&cand).is_zero() {
                    roots.push(cand);
                    break 'search;
                }
            }
        }
    }
    if roots.len() == deg {
        roots.sort_by(|a, b| a.re.cmp(&b.re).then(a.im.cmp(&b.im)));
        Ok(roots)
    } else {
        Err(deg - roots.len())
    }
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn char_poly_of_companion() {
        // Companion matrix of x^2 - 3x + 2.
        let m = vec![vec![int(0), int(-2)], vec![int(1), int(3)]];
        assert_eq!(char_poly(&m), p(&[2, -3, 1]));
    }

    #[test]
    fn squarefree_strips_repeats() {
        let f = p(&[-1, 3, -3, 1]); // (x-1)^3
        assert_eq!(f.squarefree(), p(&[-1, 1]));
    }

    #[test]
    fn finds_gaussian_roots() {
        // (x^2 - 2x + 2)(2x - 1)(x + 3): roots 1±i, 1/2, -3
        let f = Poly::new(vec![int(-6), int(16), int(-9), int(1), int(2)]);
        let r = gaussian_rational_roots(&f).unwrap();
        assert_eq!(r.len(), 4);
        assert!(r.contains(&GR::new(int(1), int(1))));
        assert!(r.contains(&GR::new(int(1), int(-1))));
        assert!(r.contains(&GR::real(rat(1, 2))));
        assert!(r.contains(&GR::real(int(-3))));
    }

    #[test]
    fn irrational_roots_are_reported() {
        assert_eq!(gaussian_rational_roots(&p(&[-2, 0, 1])), Err(2));
    }
}
