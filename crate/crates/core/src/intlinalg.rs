//! Exact integer matrix algebra: Smith normal form with transformation
//! tracking, rank, and cokernel invariant factors.

use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

/// A dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(MatrixError::Dimension("ragged rows".to_string()));
        }
        Ok(IntMatrix { rows: nrows, cols: ncols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
            .expect("rectangular input")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::Dimension(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(MatrixError::Dimension(format!(
                "{}x{} - {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].clone()).collect())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `left * a * right = diag(diagonal)` with unimodular left/right and
/// a divisibility chain d1 | d2 | ... on the nonnegative diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub diagonal: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(rows, cols);
        for (i, d) in self.diagonal.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }
}

/// Smith normal form by unimodular row/column operations, picking the
/// smallest nonzero pivot by absolute value to limit entry growth.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut m = a.clone();
    let mut left = IntMatrix::identity(a.rows());
    let mut right = IntMatrix::identity(a.cols());
    let dim = a.rows().min(a.cols());

    for k in 0..dim {
        loop {
            let Some((pi, pj)) = smallest_pivot(&m, k) else { break };
            if (pi, pj) != (k, k) {
                swap_rows(&mut m, &mut left, k, pi);
                swap_cols(&mut m, &mut right, k, pj);
            }
            let mut clean = true;
            for i in k + 1..m.rows() {
                if !m[(i, k)].is_zero() {
                    let q = rounded_quotient(&m[(i, k)], &m[(k, k)]);
                    add_row_multiple(&mut m, &mut left, i, k, &-q);
                    if !m[(i, k)].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in k + 1..m.cols() {
                if !m[(k, j)].is_zero() {
                    let q = rounded_quotient(&m[(k, j)], &m[(k, k)]);
                    add_col_multiple(&mut m, &mut right, j, k, &-q);
                    if !m[(k, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // Pivot divides the rest of the block, or we fold an offending
            // row in and restart the elimination at this corner.
            let offender = (k + 1..m.rows())
                .find(|&i| (k + 1..m.cols()).any(|j| !(&m[(i, j)] % &m[(k, k)]).is_zero()));
            match offender {
                Some(i) => {
                    add_row_multiple(&mut m, &mut left, k, i, &BigInt::one());
                }
                None => break,
            }
        }
    }

    let mut diagonal: Vec<BigInt> = (0..dim).map(|k| m[(k, k)].clone()).collect();
    for (k, d) in diagonal.iter_mut().enumerate() {
        if d.is_negative() {
            *d = -&*d;
            negate_row(&mut left, k);
        }
    }
    SmithDecomposition { left, right, diagonal }
}

fn smallest_pivot(m: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..m.rows() {
        for j in k..m.cols() {
            if m[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some(b) if m[b].abs() <= m[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Quotient rounding toward the nearest integer, so the remainder has
/// absolute value at most |b|/2.
fn rounded_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    let two_r: BigInt = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

fn swap_rows(m: &mut IntMatrix, left: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let t = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = t;
    }
    for j in 0..left.cols() {
        let t = left[(a, j)].clone();
        left[(a, j)] = left[(b, j)].clone();
        left[(b, j)] = t;
    }
}

fn swap_cols(m: &mut IntMatrix, right: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let t = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = t;
    }
    for i in 0..right.rows() {
        let t = right[(i, a)].clone();
        right[(i, a)] = right[(i, b)].clone();
        right[(i, b)] = t;
    }
}

/// row[i] += c * row[k], tracked in `left`.
fn add_row_multiple(m: &mut IntMatrix, left: &mut IntMatrix, i: usize, k: usize, c: &BigInt) {
    for j in 0..m.cols() {
        let add = c * &m[(k, j)];
        m[(i, j)] += add;
    }
    for j in 0..left.cols() {
        let add = c * &left[(k, j)];
        left[(i, j)] += add;
    }
}

/// col[j] += c * col[k], tracked in `right`.
fn add_col_multiple(m: &mut IntMatrix, right: &mut IntMatrix, j: usize, k: usize, c: &BigInt) {
    for i in 0..m.rows() {
        let add = c * &m[(i, k)];
        m[(i, j)] += add;
    }
    for i in 0..right.rows() {
        let add = c * &right[(i, k)];
        right[(i, j)] += add;
    }
}

fn negate_row(left: &mut IntMatrix, k: usize) {
    for j in 0..left.cols() {
        left[(k, j)] = -&left[(k, j)];
    }
}

pub fn rank(a: &IntMatrix) -> usize {
    smith_normal_form(a).rank()
}

/// Invariant factor decomposition of Z^n / A Z^n for square A:
/// free rank plus the torsion coefficients (> 1, in divisibility order).
pub fn cokernel_invariants(a: &IntMatrix) -> Result<(usize, Vec<BigInt>), MatrixError> {
    if !a.is_square() {
        return Err(MatrixError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let snf = smith_normal_form(a);
    let free = a.rows() - snf.rank();
    let torsion = snf
        .diagonal
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .cloned()
        .collect();
    Ok((free, torsion))
}
