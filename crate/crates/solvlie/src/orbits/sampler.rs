use num_traits::{One, Zero};
use rand::Rng;

use crate::arith::{int, Rational, GR};
use crate::basis::AdaptableBasis;
use crate::linalg;
use crate::stratification::{analyze_point, Ambient};

use super::oracle::case3_coefficients;
use super::{Constraint, SectionOracle};

const ATTEMPTS: usize = 200;

fn nonzero<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let x = rng.gen_range(-bound..=bound);
        if x != 0 {
            return x;
        }
    }
}

fn set(basis: &AdaptableBasis, l: &mut [GR], j: usize, z: GR) {
    let s = basis.sigma[j - 1];
    l[s] = z.conj();
    l[j - 1] = z;
}

/// A random point on the unit circle of `Q(i)`, or `±1` for real coordinates.
fn unit_modulus<R: Rng + ?Sized>(rng: &mut R, real: bool) -> GR {
    if real {
        return GR::from(if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    let t = Rational::new(rng.gen_range(-20..=20).into(), rng.gen_range(1..=20).into());
    let den = Rational::one() + &t * &t;
    GR::new((Rational::one() - &t * &t) / &den, (int(2) * &t) / &den)
}

/// Real 2×2 system in `(Re x, Im x)`; returns a random kernel element.
fn solve_real<R: Rng + ?Sized>(rows: [[Rational; 2]; 2], rng: &mut R, bound: i64) -> GR {
    let m: Vec<Vec<Rational>> = rows.iter().map(|r| r.to_vec()).collect();
    let ker = linalg::kernel(&m, 2);
    let mut out = (Rational::zero(), Rational::zero());
    for v in &ker {
        let c = int(nonzero(rng, bound));
        out.0 += &c * &v[0];
        out.1 += &c * &v[1];
    }
    GR::new(out.0, out.1)
}

/// Samples an exact point of the section described by `oracle` (`Λ`, `Λ_ν` or `Σ°`;
/// for `Σ` the `k*` part is drawn too).
///
/// Plain vanishing conditions are imposed directly. For Case 2 and Case 3
/// the coefficients do not involve `f(Z_j)` itself, so `f(Z_j)` is taken from
/// the real kernel of the resulting 2×2 system. Every candidate is checked
/// against the oracle before it is returned.
pub fn sample_section<R: Rng + ?Sized>(
    basis: &AdaptableBasis,
    oracle: &SectionOracle,
    rng: &mut R,
    bound: i64,
) -> Option<Vec<GR>> {
    let big = basis.dim();
    let modulus: Vec<usize> = oracle
        .constraints
        .iter()
        .filter_map(|c| if let Constraint::ModulusOne { j } = c { Some(*j) } else { None })
        .collect();
    for _ in 0..ATTEMPTS {
        let mut l = vec![GR::zero(); big];
        for j in 1..=big {
            if basis.sigma[j - 1] + 1 < j {
                continue;
            }
            let z = if modulus.contains(&j) {
                unit_modulus(rng, basis.sigma[j - 1] + 1 == j)
            } else if basis.sigma[j - 1] + 1 == j {
                GR::from(nonzero(rng, bound))
            } else {
                GR::from_i64(nonzero(rng, bound), nonzero(rng, bound))
            };
            set(basis, &mut l, j, z);
        }
        if oracle.kind != super::SectionKind::Sigma {
            for x in &mut l[basis.n..] {
                *x = GR::zero();
            }
        } else {
            // l on h is drawn from the joint kernel of the normalized A_t
            let ker = linalg::kernel(&oracle.a_basis().to_vec(), basis.r);
            let mut h = vec![Rational::zero(); basis.r];
            for v in &ker {
                h = linalg::axpy(&h, &int(rng.gen_range(-bound..=bound)), v);
            }
            for (x, c) in l[basis.n..].iter_mut().zip(h) {
                *x = GR::real(c);
            }
        }
        for c in &oracle.constraints {
            if let Constraint::Vanish { j } = *c {
                set(basis, &mut l, j, GR::zero());
            }
        }
        let combos: Vec<&Constraint> = oracle
            .constraints
            .iter()
            .filter(|c| matches!(c, Constraint::Case2Combo { .. } | Constraint::Case3Combo { .. }))
            .collect();
        let mut ok = true;
        for c in combos {
            let Ok(p) = analyze_point(basis, &l, Ambient::N) else {
                ok = false;
                break;
            };
            let (j, rows) = match *c {
                Constraint::Case2Combo { j, k } => {
                    let (b1, b2) = &p.sections.beta[k - 1];
                    (j, [[b1.re.clone(), b2.re.clone()], [b1.im.clone(), b2.im.clone()]])
                }
                Constraint::Case3Combo { j, k } => {
                    let (c1, c2) = case3_coefficients(basis, &l, &p, j, k);
                    // Re(c·(x + i y)) = Re c · x − Im c · y
                    (j, [[c1.re.clone(), -c1.im.clone()], [c2.re.clone(), -c2.im.clone()]])
                }
                _ => unreachable!(),
            };
            set(basis, &mut l, j, solve_real(rows, rng, bound));
        }
        if ok && oracle.contains(basis, &l, 0.0) {
            return Some(l);
        }
    }
    None
}
