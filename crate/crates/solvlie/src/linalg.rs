//! Dense linear algebra over any [`Field`].
//!
//! Subspaces are kept in a canonical echelon form taken with respect to the
//! *reversed* column order: every basis row ends in a 1 at its pivot, has
//! zeros after it, and the other rows vanish at that pivot. With that layout
//! the flag intersection `c_j ∩ S` is spanned by the rows whose pivot is
//! below `j`, which is the query the jump-index recursion keeps asking.

use crate::field::Field;

pub type Vector<F> = Vec<F>;
pub type Matrix<F> = Vec<Vec<F>>;

pub fn zeros<F: Field>(n: usize) -> Vector<F> {
    vec![F::zero(); n]
}

pub fn unit<F: Field>(k: usize, n: usize) -> Vector<F> {
    let mut v = zeros(n);
    v[k] = F::one();
    v
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut s = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !(x.is_zero() || y.is_zero()) || !F::EXACT {
            s = s + x.clone() * y.clone();
        }
    }
    s
}

pub fn add<F: Field>(a: &[F], b: &[F]) -> Vector<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub<F: Field>(a: &[F], b: &[F]) -> Vector<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale<F: Field>(c: &F, a: &[F]) -> Vector<F> {
    a.iter().map(|x| c.clone() * x.clone()).collect()
}

/// `a + c·b`
pub fn axpy<F: Field>(a: &[F], c: &F, b: &[F]) -> Vector<F> {
    if F::EXACT && c.is_zero() {
        return a.to_vec();
    }
    a.iter().zip(b).map(|(x, y)| x.clone() + c.clone() * y.clone()).collect()
}

pub fn is_zero_vec<F: Field>(a: &[F]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn mat_vec<F: Field>(m: &Matrix<F>, v: &[F]) -> Vector<F> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = F::zero();
                    for (k, x) in row.iter().enumerate() {
                        if !F::EXACT || !x.is_zero() {
                            s = s + x.clone() * b[k][j].clone();
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn transpose<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn identity<F: Field>(n: usize) -> Matrix<F> {
    (0..n).map(|k| unit(k, n)).collect()
}

fn pick_pivot<F: Field>(rows: &[Vec<F>], from: usize, col: usize) -> Option<usize> {
    if F::EXACT {
        (from..rows.len()).find(|&r| !rows[r][col].is_zero())
    } else {
        let best = (from..rows.len()).max_by(|&a, &b| rows[a][col].magnitude().total_cmp(&rows[b][col].magnitude()))?;
        (!rows[best][col].is_zero()).then_some(best)
    }
}

/// Forward reduced row-echelon form; returns the pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = pick_pivot(m, r, c) else { continue };
        m.swap(r, p);
        let inv = F::one() / m[r][c].clone();
        m[r] = scale(&inv, &m[r]);
        m[r][c] = F::one();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = -m[i][c].clone();
                m[i] = axpy(&m[i], &f, &m[r]);
                m[i][c] = F::zero();
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{x : M x = 0}` for a matrix with `ncols` columns.
pub fn kernel<F: Field>(m: &Matrix<F>, ncols: usize) -> Vec<Vector<F>> {
    let mut a: Matrix<F> = m.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zeros(ncols);
            v[f] = F::one();
            for (row, &p) in a.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// One solution of `M x = b`, if any.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Option<Vector<F>> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut aug: Matrix<F> = m
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut row = r.clone();
            row.push(x.clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = zeros(ncols);
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

pub fn inverse<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    let n = m.len();
    let mut aug: Matrix<F> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend(unit::<F>(i, n));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant by Gaussian elimination.
pub fn det<F: Field>(m: &Matrix<F>) -> F {
    let n = m.len();
    let mut a = m.clone();
    let mut d = F::one();
    for c in 0..n {
        let Some(p) = pick_pivot(&a, c, c) else { return F::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        let piv = a[c][c].clone();
        d = d * piv.clone();
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = -(a[i][c].clone() / piv.clone());
                a[i] = axpy(&a[i], &f, &a[c]);
            }
        }
    }
    d
}

#[derive(Clone, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    rows: Vec<Vector<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, o: &Self) -> bool {
        self.ambient == o.ambient && self.pivots == o.pivots && self.rows == o.rows
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: vec![], pivots: vec![] }
    }

    /// `span{e_0, …, e_{k-1}}`, i.e. the flag member `c_k`.
    pub fn coordinate(k: usize, ambient: usize) -> Self {
        Subspace { ambient, rows: (0..k).map(|i| unit(i, ambient)).collect(), pivots: (0..k).collect() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, ambient)
    }

    pub fn span<I: IntoIterator<Item = Vector<F>>>(vectors: I, ambient: usize) -> Self {
        let mut rows: Vec<Vector<F>> = vectors.into_iter().collect();
        for r in &rows {
            assert_eq!(r.len(), ambient, "vector length does not match ambient dimension");
        }
        let mut pivots = Vec::new();
        let mut used = 0;
        for c in (0..ambient).rev() {
            if used == rows.len() {
                break;
            }
            let Some(p) = pick_pivot(&rows, used, c) else { continue };
            rows.swap(used, p);
            let inv = F::one() / rows[used][c].clone();
            rows[used] = scale(&inv, &rows[used]);
            rows[used][c] = F::one();
            for i in 0..rows.len() {
                if i != used && !rows[i][c].is_zero() {
                    let f = -rows[i][c].clone();
                    rows[i] = axpy(&rows[i], &f, &rows[used]);
                    rows[i][c] = F::zero();
                }
            }
            pivots.push(c);
            used += 1;
        }
        rows.truncate(used);
        if !F::EXACT {
            for r in rows.iter_mut() {
                for (k, x) in r.iter_mut().enumerate() {
                    if x.is_zero() && !pivots.contains(&k) {
                        *x = F::zero();
                    }
                }
            }
        }
        let mut order: Vec<usize> = (0..used).collect();
        order.sort_by_key(|&i| pivots[i]);
        Subspace {
            ambient,
            rows: order.iter().map(|&i| rows[i].clone()).collect(),
            pivots: order.iter().map(|&i| pivots[i]).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector<F>] {
        &self.rows
    }

    /// Pivot (last nonzero coordinate) of each basis row, increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` modulo the span; zero iff `v` lies in it.
    pub fn reduce(&self, v: &[F]) -> Vector<F> {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots).rev() {
            if !w[p].is_zero() {
                let f = -w[p].clone();
                w = axpy(&w, &f, row);
            }
            w[p] = F::zero();
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    /// `c_j ∩ self` for the coordinate flag, `j` counted from 1.
    pub fn flag_part(&self, j: usize) -> Self {
        let k = self.pivots.iter().take_while(|&&p| p < j).count();
        Subspace { ambient: self.ambient, rows: self.rows[..k].to_vec(), pivots: self.pivots[..k].to_vec() }
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self::span(self.rows.iter().chain(&other.rows).cloned(), self.ambient)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(self.ambient);
        }
        // Solve Σ a_i u_i − Σ b_j w_j = 0 and map the a-part back.
        let (p, q) = (self.dim(), other.dim());
        let m: Matrix<F> = (0..self.ambient)
            .map(|k| self.rows.iter().map(|u| u[k].clone()).chain(other.rows.iter().map(|w| -w[k].clone())).collect())
            .collect();
        let ker = kernel(&m, p + q);
        let vecs = ker.iter().map(|c| {
            let mut v = zeros(self.ambient);
            for (a, u) in c[..p].iter().zip(&self.rows) {
                v = axpy(&v, a, u);
            }
            v
        });
        Self::span(vecs.collect::<Vec<_>>(), self.ambient)
    }

    /// The conjugate subspace, for coordinates in which conjugation is the entrywise one.
    pub fn conj_entrywise(&self) -> Self {
        Self::span(self.rows.iter().map(|r| r.iter().map(|x| x.conj()).collect()).collect::<Vec<_>>(), self.ambient)
    }

    /// Greedily picks the `candidates` that enlarge `self`.
    pub fn complement_in(&self, candidates: &[Vector<F>]) -> Vec<Vector<F>> {
        let mut acc = self.clone();
        let mut out = Vec::new();
        for c in candidates {
            if !acc.contains(c) {
                out.push(c.clone());
                acc = acc.sum(&Subspace::span([c.clone()], self.ambient));
            }
        }
        out
    }
}
