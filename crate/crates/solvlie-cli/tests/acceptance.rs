//! The acceptance criteria, one printed line each. Run with `--nocapture` to see them.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use solvlie::admissibility::{center_data, disintegration_check, BumpFunction, Multiplicity, Verdict};
use solvlie::algebra::{validate_spec, LieAlgebraSpec};
use solvlie::analysis::{analyze, Analysis, AnalysisOptions};
use solvlie::arith::{rat, Rational};
use solvlie::basis::{build_adaptable_basis, AdaptableBasis};
use solvlie::functional::{exp_h_coadjoint_float, exp_unipotent_coadjoint, Functional};
use solvlie::linalg::{self, Subspace};
use solvlie::orbits::{h_project, sample_section};
use solvlie::pfaffian::pfaffian;
use solvlie::stratification::{analyze_point, jump_data, random_functional, Ambient, SAMPLE_BOUND};
use solvlie::{Cf, Error, GR};
use solvlie_cli::corpus;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($fmt)+));
        }
    };
}

const VALID: [&str; 11] = [
    "ex",
    "ex2",
    "sec3-ex1",
    "sec3-ex2",
    "sec3-ex3",
    "sec5-ex3-repaired",
    "sec5-ex4-repaired",
    "free-nilpotent",
    "aniso-heisenberg",
    "sec5-ex7-repaired",
    "heisenberg-only",
];

fn spec(id: &str) -> LieAlgebraSpec {
    corpus::entry(id).unwrap_or_else(|| panic!("no corpus entry {id}")).spec().unwrap()
}

fn analysis(id: &str) -> Analysis {
    analyze(&spec(id), &AnalysisOptions::default()).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let x = rng.gen_range(-bound..=bound);
        if x != 0 {
            return x;
        }
    }
}

fn verdicts() -> Outcome {
    let want = [
        ("ex", false),
        ("ex2", true),
        ("sec5-ex3-repaired", false),
        ("sec5-ex4-repaired", false),
        ("free-nilpotent", true),
        ("aniso-heisenberg", true),
        ("sec5-ex7-repaired", false),
    ];
    let mut slowest = Duration::ZERO;
    for (id, admissible) in want {
        let s = spec(id);
        let t = Instant::now();
        let a = analyze(&s, &AnalysisOptions::default()).map_err(|e| format!("{id}: {e}"))?;
        let took = t.elapsed();
        slowest = slowest.max(took);
        let v = a.admissibility.verdict;
        ensure!(v.is_admissible() == admissible, "{id}: got {v}");
        ensure!(took < Duration::from_secs(1), "{id} took {took:?}");
    }
    Ok(format!("7 verdicts reproduced, slowest {slowest:?}"))
}

/// Real coordinates `(Z, Y, X, A)` to adaptable ones.
fn real(b: &AdaptableBasis, v: [Rational; 4]) -> Vec<GR> {
    b.to_adaptable(&v.into_iter().map(GR::real).collect::<Vec<_>>())
}

fn sec3_ex1_section_vectors() -> Outcome {
    let b = build_adaptable_basis(&spec("sec3-ex1")).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (zero, one) = (rat(0, 1), rat(1, 1));
    for _ in 0..5 {
        let q = |rng: &mut ChaCha8Rng| rat(nonzero(rng, 40), rng.gen_range(1..=17));
        let (z, x, y, a) = (q(&mut rng), q(&mut rng), q(&mut rng), q(&mut rng));
        // l = (z, x+iy, x-iy, a)
        let l = vec![GR::real(z.clone()), GR::new(x.clone(), y.clone()), GR::new(x.clone(), -y.clone()), GR::real(a)];
        let p = analyze_point(&b, &l, Ambient::G).map_err(|e| e.to_string())?;
        ensure!(p.jump.e() == vec![1, 2, 3, 4] && p.jump.j_sorted() == vec![3, 4], "layer {:?}", p.jump);
        let two_z = &z * rat(2, 1);
        let v2 = real(&b, [-(&x + &y) / &two_z, one.clone(), zero.clone(), zero.clone()]);
        let u2 = real(&b, [-(&x - &y) / &two_z, zero.clone(), one.clone(), zero.clone()]);
        let xr = real(&b, [zero.clone(), zero.clone(), one.clone(), zero.clone()]);
        ensure!(p.sections.v[1] == v2, "V_2 residual {:?}", linalg::sub(&p.sections.v[1], &v2));
        let rho_x = p.sections.rho(&b, 1, &xr);
        ensure!(rho_x == u2, "ρ_1(X) residual {:?}", linalg::sub(&rho_x, &u2));
        // the recursion takes Z_{j_2} = α X with α = l[X, V_2] = z
        ensure!(p.sections.u[1] == linalg::scale(&GR::real(z.clone()), &u2), "U_2 is not z·ρ_1(X)");
    }
    Ok("V_2 and ρ_1(X) equal the printed formulas at 5 rational points, residual 0".into())
}

fn sec3_ex3_lambda() -> Outcome {
    let a = analysis("sec3-ex3");
    ensure!(a.n_layer.layer.e == vec![3, 4, 5, 6], "e° = {:?}", a.n_layer.layer.e);
    let generic = a.n_layer.layer.e.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut checked, mut inside) = (0, 0);
    while checked < 100 {
        let mut l = random_functional(&a.basis, &mut rng, 30);
        if rng.gen_bool(0.5) {
            for c in &mut l[2..a.basis.n] {
                *c = GR::zero();
            }
        }
        // Λ lives in the generic fine layer of n*; points of lower layers are not sampled
        let jump = jump_data(&a.basis, &l, Ambient::N);
        if jump.e() != generic || jump.j_sorted() != [5, 6] {
            continue;
        }
        let predicate = l[2..6].iter().all(Zero::is_zero);
        let member = a.sections.lambda.contains(&a.basis, &l, 0.0);
        ensure!(member == predicate, "disagreement at {l:?}");
        checked += 1;
        inside += predicate as usize;
    }
    ensure!(inside > 10 && inside < 90, "unbalanced sample: {inside} of 100 inside");
    Ok(format!("e° = {{3,4,5,6}}; Λ agrees with x = y = 0 on 100 points ({inside} inside)"))
}

fn ex_end_to_end() -> Outcome {
    let a = analysis("ex");
    ensure!(a.stabilizer.nu == vec![1], "ν = {:?}", a.stabilizer.nu);
    let dim = a.basis.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let pick = |rng: &mut ChaCha8Rng| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(-50..=50) };
        let (z, y, x) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let mut l = vec![GR::zero(); dim];
        (l[0], l[1], l[2]) = (z.into(), y.into(), x.into());
        let want = z != 0 && y == 0 && x == 0;
        ensure!(a.sections.lambda_nu.contains(&a.basis, &l, 0.0) == want, "Λ_ν disagrees at ({z},{y},{x})");
    }
    let point = |z: i64| {
        let mut l = vec![GR::zero(); dim];
        l[0] = z.into();
        l
    };
    for z in [1, -1] {
        ensure!(a.sections.sigma_circ.contains(&a.basis, &point(z), 0.0), "({z},0,0) not in Σ°");
    }
    for z in [2, -3] {
        ensure!(!a.sections.sigma_circ.contains(&a.basis, &point(z), 0.0), "({z},0,0) in Σ°");
    }
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let z: f64 = rng.gen_range(0.01..100.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let mut f = Functional::zero(dim);
        f[0] = Cf::from_f64(z, 0.0);
        let p = h_project(&a.basis, &a.sections.lambda_nu, &a.stabilizer, &f, 1e-12).map_err(|e| e.to_string())?;
        // move f by the returned parameters independently and compare with ±1
        let mut x = vec![solvlie::field::tf(0.0); dim];
        for (t, coeff) in p.h_params.iter().enumerate() {
            x[a.basis.n + t] = solvlie::field::tf(*coeff);
        }
        let moved = exp_h_coadjoint_float(&a.basis, &x, &f).map_err(|e| e.to_string())?;
        let target = z.signum();
        let residual = moved
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let (re, im) = c.to_f64_pair();
                (re - if k == 0 { target } else { 0.0 }).abs().max(im.abs())
            })
            .fold(0.0, f64::max);
        let (s_re, _) = p.sigma[0].to_f64_pair();
        ensure!((s_re - target).abs() < 1e-9, "h_project returned {s_re} for z = {z}");
        worst = worst.max(residual);
    }
    ensure!(worst < 1e-9, "projection residual {worst:e}");
    Ok(format!("ν = {{1}}; Λ_ν agrees on 100 samples; Σ° = {{(±1,0,0)}}; 50 projections, residual ≤ {worst:.1e}"))
}

fn multiplicities() -> Outcome {
    let m = |id: &str| analysis(id).admissibility.multiplicity;
    let (aniso, ex, ex2) = (m("aniso-heisenberg"), m("ex"), m("ex2"));
    ensure!(aniso == Multiplicity::Finite(2), "aniso-heisenberg m = {aniso}");
    ensure!(ex == Multiplicity::Infinite, "ex m = {ex}");
    ensure!(ex2 == Multiplicity::Infinite, "ex2 m = {ex2}");
    Ok("m = 2 (aniso-heisenberg), ∞ (ex), ∞ (ex2)".into())
}

#[allow(clippy::needless_range_loop)]
fn pfaffian_squared_is_det(rng: &mut ChaCha8Rng) -> Outcome {
    for trial in 0..200 {
        let n = 2 * rng.gen_range(1..=4);
        let mut m = vec![vec![GR::zero(); n]; n];
        for a in 0..n {
            for b in a + 1..n {
                let g = GR::new(
                    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5)),
                    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5)),
                );
                m[b][a] = -g.clone();
                m[a][b] = g;
            }
        }
        let pf = pfaffian(&m).map_err(|e| e.to_string())?;
        ensure!(&pf * &pf == linalg::det(&m), "trial {trial}: Pf² ≠ det for n = {n}");
    }
    Ok("200 matrices".into())
}

fn jump_shape(bases: &[(&str, AdaptableBasis)], rng: &mut ChaCha8Rng) -> Outcome {
    for k in 0..500 {
        let (id, b) = &bases[k % bases.len()];
        let l = random_functional(b, rng, SAMPLE_BOUND);
        for amb in [Ambient::N, Ambient::G] {
            let j = jump_data(b, &l, amb);
            ensure!(j.well_formed(), "{id} {amb:?}: i = {:?}, j = {:?}", j.i, j.j);
            ensure!(j.e().len() % 2 == 0, "{id}: odd card(e)");
        }
    }
    Ok("500 functionals".into())
}

fn jump_invariance(bases: &[(&str, AdaptableBasis)], rng: &mut ChaCha8Rng) -> Outcome {
    for (id, b) in bases {
        for _ in 0..100 {
            let l = Functional(random_functional(b, rng, 50));
            let mut x_real = vec![GR::zero(); b.dim()];
            for c in &mut x_real[..b.n] {
                *c = GR::real(rat(rng.gen_range(-6..=6), rng.gen_range(1..=4)));
            }
            let x = b.to_adaptable(&x_real);
            let moved = exp_unipotent_coadjoint(b, &x, &l).map_err(|e| format!("{id}: {e}"))?;
            ensure!(moved.is_real(b), "{id}: move left the real form");
            for amb in [Ambient::N, Ambient::G] {
                let (before, after) = (jump_data(b, &l, amb), jump_data(b, &moved, amb));
                ensure!(
                    before.e() == after.e() && before.j_sorted() == after.j_sorted(),
                    "{id} {amb:?}: {:?} became {:?}",
                    before.e(),
                    after.e()
                );
            }
        }
    }
    Ok(format!("100 moves on each of {} algebras", bases.len()))
}

fn rho_orthogonality(bases: &[(&str, AdaptableBasis)], rng: &mut ChaCha8Rng) -> Outcome {
    let mut points = 0;
    for (id, b) in bases {
        for _ in 0..10 {
            let l = random_functional(b, rng, SAMPLE_BOUND);
            let p = match analyze_point(b, &l, Ambient::G) {
                Ok(p) => p,
                Err(Error::DivisionByZero(_)) => continue,
                Err(e) => return Err(format!("{id}: {e}")),
            };
            points += 1;
            let s = &p.sections;
            for k in 1..=p.jump.d() {
                for a in 0..b.dim() {
                    let r = s.rho(b, k, &linalg::unit::<GR>(a, b.dim()));
                    for m in 0..k {
                        ensure!(b.pair(&l, &r, &s.v[m]).is_zero(), "{id}: l[ρ_{k}(Z_{}), V_{}] ≠ 0", a + 1, m + 1);
                        ensure!(b.pair(&l, &r, &s.u[m]).is_zero(), "{id}: l[ρ_{k}(Z_{}), U_{}] ≠ 0", a + 1, m + 1);
                    }
                }
            }
        }
    }
    Ok(format!("{points} points, all residuals exactly 0"))
}

/// `{A ∈ h : λ([A, Z_a]) = 0 for all a ≤ n}`, straight from the brackets.
fn stabilizer_at(b: &AdaptableBasis, l: &[GR]) -> Subspace<Rational> {
    let mut rows = Vec::new();
    for a in 0..b.n {
        let z = linalg::unit::<GR>(a, b.dim());
        let vals: Vec<GR> = (0..b.r).map(|t| b.pair(l, &linalg::unit(b.n + t, b.dim()), &z)).collect();
        rows.push(vals.iter().map(|v| v.re.clone()).collect::<Vec<_>>());
        rows.push(vals.iter().map(|v| v.im.clone()).collect::<Vec<_>>());
    }
    Subspace::span(linalg::kernel(&rows, b.r), b.r)
}

fn stabilizer_constant(rng: &mut ChaCha8Rng) -> Outcome {
    for id in VALID {
        let a = analysis(id);
        for _ in 0..50 {
            let mut l = sample_section(&a.basis, &a.sections.lambda_nu, rng, SAMPLE_BOUND)
                .ok_or_else(|| format!("{id}: no Λ_ν sample"))?;
            for c in &mut l[a.basis.n..] {
                *c = GR::zero();
            }
            let k = stabilizer_at(&a.basis, &l);
            ensure!(
                k.same_as(&a.stabilizer.k),
                "{id}: stabilizer of dim {} vs k of dim {}",
                k.dim(),
                a.stabilizer.k_dim()
            );
        }
    }
    Ok(format!("50 Λ_ν samples on each of {} algebras", VALID.len()))
}

fn property_suites() -> Outcome {
    let bases: Vec<(&str, AdaptableBasis)> =
        VALID.iter().map(|id| (*id, build_adaptable_basis(&spec(id)).unwrap())).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let parts = [
        ("a", pfaffian_squared_is_det(&mut rng)),
        ("b", jump_shape(&bases, &mut rng)),
        ("c", jump_invariance(&bases, &mut rng)),
        ("d", rho_orthogonality(&bases, &mut rng)),
        ("e", stabilizer_constant(&mut rng)),
    ];
    let mut notes = Vec::new();
    for (tag, r) in parts {
        match r {
            Ok(s) => notes.push(format!("({tag}) {s}")),
            Err(e) => return Err(format!("({tag}) {e}")),
        }
    }
    Ok(notes.join("; "))
}

fn disintegration() -> Outcome {
    let a = analysis("ex");
    let f = [BumpFunction { centre: 1.5, width: 0.3 }, BumpFunction { centre: -0.8, width: 0.25 }];
    let t = Instant::now();
    let r = disintegration_check(&a, f, 1_000_000, 7).map_err(|e| e.to_string())?;
    let took = t.elapsed();
    ensure!((r.ratio - 1.0).abs() <= 0.02, "r_1/r_2 = {}", r.ratio);
    ensure!(took < Duration::from_secs(30), "took {took:?}");
    Ok(format!("r_1/r_2 = {:.6} at 10^6 samples in {took:.1?}", r.ratio))
}

fn errata() -> Outcome {
    let v = validate_spec(&spec("sec5-ex3-verbatim"));
    let first = v.failures().next().ok_or("verbatim spec passed validation")?;
    ensure!(first.code == Some("JACOBI_FAIL"), "first failure {:?}", first.code);
    ensure!(first.witness == ["A1", "X", "Y"], "witness {:?}", first.witness);
    let repaired = spec("sec5-ex3-repaired");
    ensure!(validate_spec(&repaired).passed(), "repaired spec fails validation");
    let mut w = vec![Rational::zero(); repaired.dim()];
    for (label, c) in [("A1", rat(-1, 2)), ("A2", rat(-3, 2)), ("A3", rat(1, 1))] {
        w[repaired.index_of(label).ok_or("missing label")?] = c;
    }
    ensure!(center_data(&repaired).z_g.contains(&w), "-1/2 A1 - 3/2 A2 + A3 is not central");
    let verdict = analysis("sec5-ex3-repaired").admissibility.verdict;
    ensure!(verdict == Verdict::NotAdmissibleCenterMeetsH, "repaired verdict {verdict}");
    Ok("verbatim: JACOBI_FAIL on (A1, X, Y); repaired passes, center ∋ -1/2 A1 - 3/2 A2 + A3".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("verdict reproduction", verdicts),
        ("section vectors of the first construction example", sec3_ex1_section_vectors),
        ("Λ of the double Heisenberg example", sec3_ex3_lambda),
        ("ex end to end", ex_end_to_end),
        ("multiplicity", multiplicities),
        ("property suites", property_suites),
        ("disintegration ratio", disintegration),
        ("errata detection", errata),
    ];
    let mut failed = Vec::new();
    for (n, (name, run)) in criteria.iter().enumerate() {
        let r = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match r {
            Ok(detail) => println!("PASS {}  {name}: {detail}", n + 1),
            Err(why) => {
                println!("FAIL {}  {name}: {why}", n + 1);
                failed.push(n + 1);
            }
        }
    }
    if !failed.is_empty() {
        println!("criteria failed: {failed:?}");
        std::process::exit(1);
    }
}
