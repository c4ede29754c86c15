//! Moment matrices `V[i][j] = j^i` and their kernels.
//!
//! The first `r` rows of the `(n+1) x (n+1)` Vandermonde matrix on the nodes
//! `0..=n` have rank `r`, so fixing `n + 1 - r` coordinates of a kernel vector
//! determines it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::linalg;
use super::{IntMatrix, Rational};
use crate::error::{Error, Result};

/// The `num_rows x num_cols` matrix with entry `(i, j) = j^i`, where `0^0 = 1`.
pub fn moment_matrix(num_rows: usize, num_cols: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(num_rows, num_cols);
    for i in 0..num_rows {
        for j in 0..num_cols {
            m.set(i, j, Pow::pow(BigInt::from(j), i as u32));
        }
    }
    m
}

fn rational_rows(m: &IntMatrix) -> Vec<Vec<Rational>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect()
        })
        .collect()
}

/// The kernel vector of `moment_matrix(n, n + 1)`, scaled so its first entry is 1.
///
/// Equals `((-1)^k * C(n, k))_k`.
pub fn vandermonde_kernel(n: usize) -> Vec<Rational> {
    assert!(n >= 1, "vandermonde_kernel needs n >= 1");
    let rows = rational_rows(&moment_matrix(n, n + 1));
    let mut basis = linalg::nullspace(&rows, n + 1);
    debug_assert_eq!(basis.len(), 1, "moment matrix must have corank one");
    let v = basis.pop().expect("nonempty kernel");
    let a0 = v[0].clone();
    v.into_iter().map(|c| c / &a0).collect()
}

/// Completes a partially known vector in the kernel of
/// `moment_matrix(n - l, n + 1)`.
///
/// `known` maps coordinates in `0..=n` to their values; at least `l + 1` are
/// required. Extra entries are checked for consistency.
pub fn vandermonde_complete(
    n: usize,
    l: usize,
    known: &BTreeMap<usize, Rational>,
) -> Result<Vec<Rational>> {
    if l >= n {
        return Err(Error::InvalidArgument(format!(
            "degree l = {l} must be below n = {n}"
        )));
    }
    complete_in_kernel(n, n - l, known)
}

/// Like [`vandermonde_complete`] but takes the number of moment rows directly,
/// so that `rows = 0` (no constraint) is allowed.
pub(crate) fn complete_in_kernel(
    n: usize,
    rows: usize,
    known: &BTreeMap<usize, Rational>,
) -> Result<Vec<Rational>> {
    if let Some((&k, _)) = known.range(n + 1..).next() {
        return Err(Error::InvalidArgument(format!(
            "known index {k} outside 0..={n}"
        )));
    }
    let needed = n + 1 - rows.min(n + 1);
    if known.len() < needed {
        return Err(Error::Underdetermined {
            needed,
            given: known.len(),
        });
    }
    let ncols = n + 1;
    let mut a = rational_rows(&moment_matrix(rows, ncols));
    let mut b = vec![Rational::zero(); a.len()];
    for (&k, v) in known {
        let mut e = vec![Rational::zero(); ncols];
        e[k] = Rational::one();
        a.push(e);
        b.push(v.clone());
    }
    match linalg::solve_unique(&a, &b, ncols) {
        Ok(Some(v)) => Ok(v),
        Ok(None) => Err(Error::Underdetermined {
            needed,
            given: known.len(),
        }),
        Err(e) => Err(e),
    }
}
