use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense rectangular matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// Invariant factors `d_1 | d_2 | ...` (nonzero only) and the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Factors greater than one; these are the torsion coefficients of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix with `cols` columns from rows given as vectors.
    pub fn from_big_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        IntMatrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Determinant by fraction-free (Bareiss) elimination. Panics if not square.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// Smith normal form invariant factors.
    ///
    /// Only the diagonal is returned; the unimodular transforms are not tracked.
    pub fn smith_normal_form(&self) -> SmithForm {
        let mut a = self.to_rows();
        let (nr, nc) = (self.rows, self.cols);
        let mut factors = Vec::new();
        for t in 0..nr.min(nc) {
            let Some((pi, pj)) = min_abs_entry(&a, t, t) else {
                break;
            };
            a.swap(t, pi);
            swap_cols(&mut a, t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..nr {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let q = a[i][t].div_floor(&a[t][t]);
                    sub_row_multiple(&mut a, i, t, &q, t);
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..nc {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let q = a[t][j].div_floor(&a[t][t]);
                    for i in t..nr {
                        let v = &a[i][t] * &q;
                        a[i][j] -= v;
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    // move the smallest remainder in row/column t onto the pivot
                    let mut best = (t, t);
                    for i in t + 1..nr {
                        if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                            best = (i, t);
                        }
                    }
                    for j in t + 1..nc {
                        if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                            best = (t, j);
                        }
                    }
                    a.swap(t, best.0);
                    swap_cols(&mut a, t, best.1);
                    continue;
                }
                let p = a[t][t].clone();
                let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !a[i][j].is_multiple_of(&p)));
                match bad {
                    Some(i) => {
                        // row t += row i, then re-eliminate
                        for j in t..nc {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                    }
                    None => break,
                }
            }
            factors.push(a[t][t].abs());
        }
        let rank = factors.len();
        SmithForm { factors, rank }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.hermite_normal_form().rows()
    }

    /// Row-style Hermite normal form: the nonzero rows of an echelon basis of
    /// the row lattice, pivots positive, entries above each pivot reduced into
    /// `[0, pivot)`.
    pub fn hermite_normal_form(&self) -> Self {
        let mut a = self.to_rows();
        let nc = self.cols;
        let mut r = 0;
        for c in 0..nc {
            if r == a.len() {
                break;
            }
            // Euclid on column c across rows r..
            loop {
                let Some(p) = (r..a.len())
                    .filter(|&i| !a[i][c].is_zero())
                    .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()))
                else {
                    break;
                };
                a.swap(r, p);
                let mut done = true;
                for i in r + 1..a.len() {
                    if a[i][c].is_zero() {
                        continue;
                    }
                    let q = a[i][c].div_floor(&a[r][c]);
                    sub_row_multiple(&mut a, i, r, &q, c);
                    if !a[i][c].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if a.get(r).is_none_or(|row| row[c].is_zero()) {
                continue;
            }
            if a[r][c].is_negative() {
                for v in a[r][c..].iter_mut() {
                    *v = -&*v;
                }
            }
            for i in 0..r {
                let q = a[i][c].div_floor(&a[r][c]);
                if !q.is_zero() {
                    sub_row_multiple(&mut a, i, r, &q, c);
                }
            }
            r += 1;
        }
        a.truncate(r);
        Self::from_big_rows(nc, a)
    }

    /// Reduces `v` modulo the row lattice of `self`, which must already be in
    /// Hermite normal form. The result is the canonical coset representative.
    pub fn reduce_mod_hnf(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        let mut v = v.to_vec();
        for i in 0..self.rows {
            let row = self.row(i);
            let Some(c) = row.iter().position(|e| !e.is_zero()) else {
                continue;
            };
            let q = v[c].div_floor(&row[c]);
            if q.is_zero() {
                continue;
            }
            for (x, e) in v[c..].iter_mut().zip(&row[c..]) {
                *x -= &q * e;
            }
        }
        v
    }

    /// Column index of the leading entry of each row (for an echelon matrix).
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.rows)
            .filter_map(|i| self.row(i).iter().position(|e| !e.is_zero()))
            .collect()
    }
}

fn min_abs_entry(a: &[Vec<BigInt>], r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(r0) {
        for (j, v) in row.iter().enumerate().skip(c0) {
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if v.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// `row[dst] -= q * row[src]` over columns `from..`.
fn sub_row_multiple(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt, from: usize) {
    let (d, s) = if dst < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d[from..].iter_mut().zip(&s[from..]) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
