use rand::Rng;
use serde::Serialize;

use crate::arith::GR;
use crate::basis::AdaptableBasis;
use crate::error::{Error, Result};

use super::{analyze_point, Ambient, LayerDescriptor};

/// Coordinate bound for sampled functionals.
pub const SAMPLE_BOUND: i64 = 1000;

/// A reality-constrained functional with Gaussian-integer values `l(Z_a)`,
/// each part drawn from `[-bound, bound]`.
pub fn random_functional<R: Rng + ?Sized>(basis: &AdaptableBasis, rng: &mut R, bound: i64) -> Vec<GR> {
    let big = basis.dim();
    let mut l = vec![GR::from(0); big];
    for a in 0..big {
        let s = basis.sigma[a];
        if s == a {
            l[a] = GR::from(rng.gen_range(-bound..=bound));
        } else if s > a {
            let z = GR::from_i64(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
            l[s] = z.conj();
            l[a] = z;
        }
    }
    l
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericLayer {
    pub layer: LayerDescriptor,
    /// Samples landing in the chosen layer, out of `trials`.
    pub agreeing: usize,
    pub trials: usize,
    /// A sampled point of the chosen layer.
    #[serde(skip)]
    pub witness: Vec<GR>,
}

/// Samples `trials` functionals and keeps the layer with the largest `e`,
/// ties going to the lexicographically smallest `(e, j)`.
///
/// Points where some `l[V_k, U_k]` vanishes sit on a lower layer and are
/// skipped. Fewer than `⌈0.9·trials⌉` agreeing samples is an error.
pub fn generic_layer<R: Rng + ?Sized>(
    basis: &AdaptableBasis,
    ambient: Ambient,
    rng: &mut R,
    trials: usize,
) -> Result<GenericLayer> {
    let trials = trials.max(1);
    let mut found: Vec<(LayerDescriptor, usize, Vec<GR>)> = Vec::new();
    for _ in 0..trials {
        let l = random_functional(basis, rng, SAMPLE_BOUND);
        let layer = match analyze_point(basis, &l, ambient) {
            Ok(p) => p.layer,
            Err(Error::DivisionByZero(_)) => continue,
            Err(e) => return Err(e),
        };
        match found.iter_mut().find(|(f, _, _)| f.same_layer(&layer)) {
            Some(entry) => entry.1 += 1,
            None => found.push((layer, 1, l)),
        }
    }
    let (layer, agreeing, witness) = found
        .into_iter()
        .min_by(|(a, _, _), (b, _, _)| {
            b.e.len().cmp(&a.e.len()).then_with(|| (&a.e, &a.j, &a.phi).cmp(&(&b.e, &b.j, &b.phi)))
        })
        .ok_or(Error::InconsistentSampling { agreeing: 0, trials })?;
    let need = (9 * trials).div_ceil(10);
    if agreeing < need {
        return Err(Error::InconsistentSampling { agreeing, trials });
    }
    Ok(GenericLayer { layer, agreeing, trials, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SpecBuilder;
    use crate::basis::build_adaptable_basis;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn heisenberg_extension_generic_layers() {
        let mut b = SpecBuilder::new("ex", vec!["Z", "Y", "X"], vec!["A", "B"]).unwrap();
        b.bracket("X", "Y", &[("1", "Z")]).unwrap();
        b.bracket("A", "X", &[("1/2", "X")]).unwrap();
        b.bracket("A", "Y", &[("1/2", "Y")]).unwrap();
        b.bracket("A", "Z", &[("1", "Z")]).unwrap();
        let ab = build_adaptable_basis(&b.build()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = generic_layer(&ab, Ambient::N, &mut rng, 100).unwrap();
        assert_eq!(n.layer.e, vec![2, 3]);
        assert_eq!(n.agreeing, 100);
        let g = generic_layer(&ab, Ambient::G, &mut rng, 100).unwrap();
        assert_eq!(g.layer.e, vec![1, 2, 3, 4]);
        assert_eq!(g.layer.phi, vec![1]);
    }

    #[test]
    fn abelian_n_has_no_jumps() {
        let mut b = SpecBuilder::new("ab", vec!["Y", "X"], vec!["A"]).unwrap();
        b.bracket("A", "X", &[("1", "X")]).unwrap();
        b.bracket("A", "Y", &[("1", "Y")]).unwrap();
        let ab = build_adaptable_basis(&b.build()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let n = generic_layer(&ab, Ambient::N, &mut rng, 20).unwrap();
        assert!(n.layer.e.is_empty());
    }
}
