use serde::Serialize;

use crate::basis::AdaptableBasis;
use crate::error::Result;
use crate::field::Field;

use super::{analyze_point, Ambient, JumpData};

/// Which of the cases (a)–(e) determines `Z_{i_k}(l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum KCase {
    K0,
    K1,
    K2,
    K3,
    K4,
    K5,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LayerDescriptor {
    pub ambient: Ambient,
    pub e: Vec<usize>,
    pub i: Vec<usize>,
    /// In recursion order, `j[k-1] = j_k`.
    pub j: Vec<usize>,
    pub d: usize,
    /// `I = {j : c_j self-conjugate}`, within `0..=dim`.
    #[serde(rename = "I")]
    pub self_conj: Vec<usize>,
    /// `(j′, j″)` for `j = 1..=dim`.
    pub primes: Vec<(usize, usize)>,
    /// `K_0 … K_5` as sets of `k` (1-based).
    pub k_sets: [Vec<usize>; 6],
    /// The case used for each `k`; `None` when `i_k` is in no `K` set.
    pub cases: Vec<Option<KCase>>,
    pub phi: Vec<usize>,
}

impl LayerDescriptor {
    /// Everything except `φ`, which needs the section vectors.
    pub fn from_jump<F: Field>(basis: &AdaptableBasis, jump: &JumpData<F>) -> Self {
        let dim = jump.ambient.dim(basis);
        let in_i = |j: usize| basis.in_i(j);
        let self_conj: Vec<usize> = (0..=dim).filter(|&j| in_i(j)).collect();
        let primes = (1..=dim)
            .map(|j| {
                let lo = (0..j).rev().find(|&x| in_i(x)).expect("0 ∈ I");
                let hi = (j..=dim).find(|&x| in_i(x)).expect("dim ∈ I");
                (lo, hi)
            })
            .collect::<Vec<_>>();
        let e = jump.e();
        let in_e = |x: usize| e.contains(&x);
        let in_jset = |x: usize| jump.j.contains(&x);
        let in_iset = |x: usize| jump.i.contains(&x);

        let mut k_sets: [Vec<usize>; 6] = Default::default();
        for (k0, &ik) in jump.i.iter().enumerate() {
            let k = k0 + 1;
            let (p1, p2) = primes[ik - 1];
            let tests = [
                p2 - p1 == 1,
                !in_i(ik) && !in_e(ik + 1),
                ik >= 1 && in_jset(ik - 1) && !in_i(ik - 1),
                !in_i(ik) && in_jset(ik + 1),
                !in_i(ik) && in_iset(ik + 1),
                ik >= 1 && in_iset(ik - 1) && !in_i(ik - 1),
            ];
            for (s, t) in tests.iter().enumerate() {
                if *t {
                    k_sets[s].push(k);
                }
            }
        }
        let order = [(0, KCase::K0), (1, KCase::K1), (3, KCase::K3), (4, KCase::K4), (2, KCase::K2), (5, KCase::K5)];
        let cases =
            (1..=jump.d()).map(|k| order.iter().find(|(s, _)| k_sets[*s].contains(&k)).map(|&(_, c)| c)).collect();

        LayerDescriptor {
            ambient: jump.ambient,
            e,
            i: jump.i.clone(),
            j: jump.j.clone(),
            d: jump.d(),
            self_conj,
            primes,
            k_sets,
            cases,
            phi: Vec::new(),
        }
    }

    /// The fine-layer key `(e, j)`, both as sets. The order in which the
    /// recursion meets `j` is not part of the layer.
    pub fn fine_key(&self) -> (Vec<usize>, Vec<usize>) {
        let mut j = self.j.clone();
        j.sort_unstable();
        (self.e.clone(), j)
    }

    /// Ultrafine agreement: same `e`, `j` and `φ`.
    pub fn same_layer(&self, o: &Self) -> bool {
        self.fine_key() == o.fine_key() && self.phi == o.phi
    }

    /// `k` with `j_k = j` or `i_k = j`, 1-based.
    pub fn pair_of(&self, j: usize) -> Option<usize> {
        self.i.iter().position(|&x| x == j).or_else(|| self.j.iter().position(|&x| x == j)).map(|p| p + 1)
    }
}

/// The layer through `l`, including `φ(l)`.
pub fn layer_descriptor<F: Field>(basis: &AdaptableBasis, l: &[F], ambient: Ambient) -> Result<LayerDescriptor> {
    analyze_point(basis, l, ambient).map(|p| p.layer)
}
