mod common;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solvlie::field::tf;
use solvlie::functional::{exp_h_coadjoint_float, Functional};
use solvlie::orbits::{h_project, sample_section, SectionOracle};
use solvlie::stratification::SAMPLE_BOUND;
use solvlie::{Cf, GR};

fn maybe_zero(rng: &mut ChaCha8Rng) -> i64 {
    if rng.gen_bool(0.5) {
        0
    } else {
        rng.gen_range(-50..=50)
    }
}

#[test]
fn ex_lambda_nu_is_the_z_axis() {
    let a = common::analysis("ex");
    let oracle = &a.sections.lambda_nu;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut hits = 0;
    for _ in 0..100 {
        let (z, y, x) = (maybe_zero(&mut rng), maybe_zero(&mut rng), maybe_zero(&mut rng));
        let l: Vec<GR> = [z, y, x, 0, 0].into_iter().map(GR::from).collect();
        let expected = x == 0 && y == 0 && z != 0;
        hits += expected as usize;
        assert_eq!(oracle.contains(&a.basis, &l, 0.0), expected, "{z} {y} {x}");
    }
    assert!(hits > 5);
}

#[test]
fn ex_sigma_circ_is_two_points() {
    let a = common::analysis("ex");
    let o = &a.sections.sigma_circ;
    let pt = |z: i64, x: i64| -> Vec<GR> { [z, 0, x, 0, 0].into_iter().map(GR::from).collect() };
    assert!(o.contains(&a.basis, &pt(1, 0), 0.0));
    assert!(o.contains(&a.basis, &pt(-1, 0), 0.0));
    assert!(!o.contains(&a.basis, &pt(2, 0), 0.0));
    assert!(!o.contains(&a.basis, &pt(1, 3), 0.0));
}

#[test]
fn ex_h_project_lands_on_plus_or_minus_one() {
    let a = common::analysis("ex");
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let z: f64 = rng.gen_range(0.01..100.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let mut f = Functional::zero(a.basis.dim());
        f[0] = Cf::from_f64(z, 0.0);
        let p = h_project(&a.basis, &a.sections.lambda_nu, &a.stabilizer, &f, 1e-12).unwrap();
        let s = p.sigma[0].to_f64_pair();
        assert!((s.0 - z.signum()).abs() < 1e-9 && s.1.abs() < 1e-9, "{z} -> {s:?}");
        // exp(tA)·f scales z by e^{-t}
        assert!((p.h_params[0] - z.abs().ln()).abs() < 1e-9);
        assert!(a.sections.sigma_circ.contains(&a.basis, &p.sigma, 1e-9));
    }
}

#[test]
fn ex2_orbits_cross_the_unit_circle() {
    let a = common::analysis("ex2");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let (re, im): (f64, f64) = (rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0));
        let mut f = Functional::zero(a.basis.dim());
        f[0] = Cf::from_f64(re, im);
        f[1] = Cf::from_f64(re, -im);
        let p = h_project(&a.basis, &a.sections.lambda_nu, &a.stabilizer, &f, 1e-12).unwrap();
        assert!((p.sigma[0].abs_f64() - 1.0).abs() < 1e-9);
        assert!(a.sections.sigma_circ.contains(&a.basis, &p.sigma, 1e-9));
    }
}

#[test]
fn projection_rejects_points_off_lambda_nu() {
    let a = common::analysis("ex");
    let mut f = Functional::zero(a.basis.dim());
    f[0] = Cf::from_f64(2.0, 0.0);
    f[2] = Cf::from_f64(1.0, 0.0);
    assert!(h_project(&a.basis, &a.sections.lambda_nu, &a.stabilizer, &f, 1e-12).is_err());
}

#[test]
fn sec3_ex3_lambda_is_x_equals_y_equals_zero() {
    let a = common::analysis("sec3-ex3");
    assert_eq!(a.n_layer.layer.e, vec![3, 4, 5, 6]);
    let o = SectionOracle::lambda(&a.basis, &a.n_layer.layer);
    assert_eq!(o.printable_form.as_deref(), Some("x = y = 0"));
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let cplx = |rng: &mut ChaCha8Rng, zero: bool| {
        if zero {
            GR::zero()
        } else {
            loop {
                let g = GR::from_i64(rng.gen_range(-30..=30), rng.gen_range(-30..=30));
                if !g.is_zero() {
                    return g;
                }
            }
        }
    };
    // the layer {3,4,5,6} needs both l(Z1) = Re z and l(Z2) = Im z nonzero
    let real_z = vec![GR::from(3), GR::from(3), GR::zero(), GR::zero(), GR::zero(), GR::zero()];
    assert!(!o.contains(&a.basis, &real_z, 0.0));
    for _ in 0..100 {
        let z = loop {
            let z = cplx(&mut rng, false);
            if !z.re.is_zero() && !z.im.is_zero() {
                break z;
            }
        };
        let (zy, zx) = (rng.gen_bool(0.5), rng.gen_bool(0.5));
        let y = cplx(&mut rng, zy);
        let x = cplx(&mut rng, zx);
        let l = vec![z.clone(), z.conj(), y.clone(), y.conj(), x.clone(), x.conj()];
        assert_eq!(o.contains(&a.basis, &l, 0.0), x.is_zero() && y.is_zero(), "{z} {y} {x}");
    }
}

#[test]
fn lambda_nu_is_h_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for id in common::VALID {
        let a = common::analysis(id);
        if a.basis.r == 0 {
            continue;
        }
        for _ in 0..5 {
            let l = sample_section(&a.basis, &a.sections.lambda_nu, &mut rng, SAMPLE_BOUND).unwrap();
            let mut x = vec![tf(0.0); a.basis.dim()];
            for c in &mut x[a.basis.n..] {
                *c = tf(rng.gen_range(-0.5..0.5));
            }
            let moved = exp_h_coadjoint_float(&a.basis, &x, &Functional(l).to_cf()).unwrap();
            // relative tolerance: sampled coordinates are up to SAMPLE_BOUND
            let scale = moved.iter().map(|c| c.abs_f64()).fold(1.0, f64::max);
            assert!(a.sections.lambda_nu.contains(&a.basis, &moved, 1e-9 * scale), "{id}");
        }
    }
}

#[test]
fn sampled_sigma_points_satisfy_their_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for id in common::VALID {
        let a = common::analysis(id);
        for o in [&a.sections.lambda, &a.sections.lambda_nu, &a.sections.sigma_circ, &a.sections.sigma] {
            let l = sample_section(&a.basis, o, &mut rng, SAMPLE_BOUND).unwrap_or_else(|| panic!("{id} {:?}", o.kind));
            assert!(o.contains(&a.basis, &l, 0.0));
        }
    }
}

#[test]
fn fine_layers_are_keyed_by_sets() {
    // at Re z = Im z the recursion pairs Y1+iY2 with X1-iX2 first, but j is still {5,6}
    let a = common::analysis("sec3-ex3");
    let z = GR::from_i64(18, 18);
    let l = vec![z.clone(), z.conj(), GR::zero(), GR::zero(), GR::zero(), GR::zero()];
    let jump = solvlie::stratification::jump_data(&a.basis, &l, solvlie::stratification::Ambient::N);
    assert_eq!(jump.j, vec![6, 5]);
    assert!(a.sections.lambda.contains(&a.basis, &l, 0.0));
}
