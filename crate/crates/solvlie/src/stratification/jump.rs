use crate::basis::AdaptableBasis;
use crate::field::Field;
use crate::linalg::{self, Subspace};

use super::{combine, covector, Ambient};

#[derive(Clone, Debug)]
pub struct JumpData<F> {
    pub ambient: Ambient,
    /// `i_1 < i_2 < …`, 1-based.
    pub i: Vec<usize>,
    /// `j_1, j_2, …` in recursion order (not sorted).
    pub j: Vec<usize>,
    /// `h_0(l) ⊇ h_1(l) ⊇ … ⊇ h_d(l)`
    pub flag: Vec<Subspace<F>>,
}

impl<F: Field> JumpData<F> {
    pub fn d(&self) -> usize {
        self.i.len()
    }

    /// `e(l)`, sorted.
    pub fn e(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.i.iter().chain(&self.j).copied().collect();
        e.sort_unstable();
        e
    }

    pub fn j_sorted(&self) -> Vec<usize> {
        let mut j = self.j.clone();
        j.sort_unstable();
        j
    }

    /// `card(e)` even, `i_k < j_k`, `i` strictly increasing.
    pub fn well_formed(&self) -> bool {
        let mut e = self.e();
        e.dedup();
        e.len() == 2 * self.d()
            && self.i.iter().zip(&self.j).all(|(a, b)| a < b)
            && self.i.windows(2).all(|w| w[0] < w[1])
    }

    /// The last member `h_d(l)`; for the `n`-flag this is the polarization.
    pub fn last(&self) -> &Subspace<F> {
        self.flag.last().expect("flag starts with h_0")
    }
}

/// Runs the polarizing recursion.
///
/// With the echelon layout of [`Subspace`], `c_j ∩ h_{k-1}` is spanned by the
/// rows of `h_{k-1}` with pivot below `j`. So `i_k` is the pivot of the first
/// row `w` that pairs nontrivially with `h_{k-1}`, every earlier row already
/// lies in `h_{k-1}^l`, and `h_k = {v ∈ h_{k-1} : l[w, v] = 0}`. The printed
/// base case `h_1 = (Z_{i_1})^l` is the instance `k = 1`, `h_0 = c`.
pub fn jump_data<F: Field>(basis: &AdaptableBasis, l: &[F], ambient: Ambient) -> JumpData<F> {
    let big = basis.dim();
    let b = basis.form_matrix(l);
    let mut h = Subspace::coordinate(ambient.dim(basis), big);
    let (mut i, mut j, mut flag) = (Vec::new(), Vec::new(), Vec::new());
    loop {
        let rows = h.basis();
        let pairing: Vec<Vec<F>> = rows
            .iter()
            .map(|w| {
                let cw = covector(&b, w);
                rows.iter().map(|v| linalg::dot(&cw, v)).collect()
            })
            .collect();
        let Some(p) = pairing.iter().position(|r| !linalg::is_zero_vec(r)) else { break };
        let ker = linalg::kernel(&vec![pairing[p].clone()], rows.len());
        let next = Subspace::span(ker.iter().map(|c| combine(c, rows, big)).collect::<Vec<_>>(), big);
        let q = rows.iter().position(|v| !next.contains(v)).expect("h_k is a proper subspace");
        i.push(h.pivots()[p] + 1);
        j.push(h.pivots()[q] + 1);
        flag.push(h);
        h = next;
    }
    flag.push(h);
    let out = JumpData { ambient, i, j, flag };
    debug_assert!(out.well_formed(), "malformed jump data {:?} {:?}", out.i, out.j);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SpecBuilder;
    use crate::arith::GR;
    use crate::basis::build_adaptable_basis;

    fn gr(xs: &[(i64, i64)]) -> Vec<GR> {
        xs.iter().map(|&(a, b)| GR::from_i64(a, b)).collect()
    }

    #[test]
    fn heisenberg_extension_jumps() {
        let mut b = SpecBuilder::new("ex", vec!["Z", "Y", "X"], vec!["A", "B"]).unwrap();
        b.bracket("X", "Y", &[("1", "Z")]).unwrap();
        b.bracket("A", "X", &[("1/2", "X")]).unwrap();
        b.bracket("A", "Y", &[("1/2", "Y")]).unwrap();
        b.bracket("A", "Z", &[("1", "Z")]).unwrap();
        let ab = build_adaptable_basis(&b.build()).unwrap();
        let l = gr(&[(3, 0), (1, 0), (-2, 0), (5, 0), (7, 0)]);
        let n = jump_data(&ab, &l, Ambient::N);
        assert_eq!((n.e(), n.i.clone(), n.j.clone()), (vec![2, 3], vec![2], vec![3]));
        assert_eq!(n.last().dim(), 2);
        let g = jump_data(&ab, &l, Ambient::G);
        assert_eq!((g.i.clone(), g.j.clone()), (vec![1, 2], vec![4, 3]));
        assert!(g.well_formed());
        let zero = jump_data(&ab, &gr(&[(0, 0); 5]), Ambient::G);
        assert_eq!(zero.d(), 0);
    }

    #[test]
    fn complex_heisenberg_jumps() {
        let mut b = SpecBuilder::new("e1", vec!["Z", "Y", "X"], vec!["A"]).unwrap();
        b.bracket("X", "Y", &[("1", "Z")]).unwrap();
        b.bracket("A", "X", &[("1", "X"), ("-1", "Y")]).unwrap();
        b.bracket("A", "Y", &[("1", "X"), ("1", "Y")]).unwrap();
        b.bracket("A", "Z", &[("2", "Z")]).unwrap();
        b.hint(vec![
            ("Z", vec![("1", "Z")]),
            ("X+iY", vec![("1", "X"), ("i", "Y")]),
            ("X-iY", vec![("1", "X"), ("-i", "Y")]),
        ])
        .unwrap();
        let ab = build_adaptable_basis(&b.build()).unwrap();
        let l = gr(&[(2, 0), (1, 3), (1, -3), (4, 0)]);
        let g = jump_data(&ab, &l, Ambient::G);
        assert_eq!(g.e(), vec![1, 2, 3, 4]);
        assert_eq!((g.i.clone(), g.j.clone()), (vec![1, 2], vec![4, 3]));
    }
}
