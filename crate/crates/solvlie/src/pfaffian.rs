//! Pfaffians of skew matrices and the Plancherel density `|Pf(f)|`.

use crate::basis::AdaptableBasis;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// Exact Pfaffian by expansion along the first row.
pub fn pfaffian<F: Field>(m: &Matrix<F>) -> Result<F> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::NotSkew);
    }
    for a in 0..n {
        for b in a..n {
            if !(m[a][b].clone() + m[b][a].clone()).is_zero() {
                return Err(Error::NotSkew);
            }
        }
    }
    if n % 2 == 1 {
        return Err(Error::OddDimension);
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(expand(m, &idx))
}

fn expand<F: Field>(m: &Matrix<F>, idx: &[usize]) -> F {
    if idx.is_empty() {
        return F::one();
    }
    let first = idx[0];
    let mut acc = F::zero();
    for (p, &c) in idx.iter().enumerate().skip(1) {
        let entry = &m[first][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != c).collect();
        let term = entry.clone() * expand(m, &rest);
        // sign (-1)^(p+1) with p counted from 0 at `first`
        acc = if p % 2 == 1 { acc + term } else { acc - term };
    }
    acc
}

/// `M_e(f) = [f[Z_a, Z_b]]_{a,b ∈ e}` with 1-based indices.
pub fn jump_matrix<F: Field>(basis: &AdaptableBasis, f: &[F], e: &[usize]) -> Matrix<F> {
    let b = basis.form_matrix(f);
    e.iter().map(|&a| e.iter().map(|&c| b[a - 1][c - 1].clone()).collect()).collect()
}

/// `Pf(M_{e°}(f))`, whose modulus is the Plancherel density at `f`.
pub fn plancherel_pfaffian<F: Field>(basis: &AdaptableBasis, f: &[F], e: &[usize]) -> Result<F> {
    pfaffian(&jump_matrix(basis, f, e))
}
