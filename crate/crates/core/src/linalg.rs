//! Exact rational linear algebra over small dense matrices.
//!
//! Two independent routes decide positive definiteness: leading principal
//! minors computed by fraction-free (Bareiss) elimination, and the pivots of
//! an `L D Lᵀ` factorization. For matrices with non-positive off-diagonal
//! entries a third characterization applies: `A` is positive definite iff
//! some entrywise positive `v` has `A v` entrywise positive. The canonical
//! witness is `v = A⁻¹ (1, …, 1)`.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{LinalgError, NotFoundReason};
use crate::graph::IntersectionMatrix;
use crate::rational::{int, to_exact_string, Rational};

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != n_cols) {
            return Err(LinalgError::DimensionMismatch { expected: n_cols, found: bad.len() });
        }
        Ok(RationalMatrix { rows: n_rows, cols: n_cols, data: rows.concat() })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self[(i, j)].clone());
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let s = (0..self.cols).fold(Rational::zero(), |acc, k| acc + &self[(i, k)] * &rhs[(k, j)]);
                out.set(i, j, s);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if self.cols != v.len() {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Rational::zero(), |acc, (a, x)| acc + a * x))
            .collect())
    }

    /// Top-left `k × k` block.
    pub fn leading(&self, k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, self[(i, j)].clone());
            }
        }
        m
    }

    fn check_square(&self) -> Result<(), LinalgError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols })
        }
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl From<&IntersectionMatrix> for RationalMatrix {
    fn from(a: &IntersectionMatrix) -> Self {
        Self::from_rows(a.to_rational_rows()).expect("intersection matrices are square")
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(to_exact_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for row in cells.chunks(self.cols.max(1)) {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", padded.join(" "))?;
        }
        Ok(())
    }
}

/// A square matrix checked to equal its transpose.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricMatrix(RationalMatrix);

impl SymmetricMatrix {
    pub fn new(m: RationalMatrix) -> Result<Self, LinalgError> {
        m.check_square()?;
        for i in 0..m.rows {
            for j in 0..i {
                if m[(i, j)] != m[(j, i)] {
                    return Err(LinalgError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymmetricMatrix(m))
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        Self::new(RationalMatrix::from_int_rows(rows)?)
    }

    pub fn identity(n: usize) -> Self {
        SymmetricMatrix(RationalMatrix::identity(n))
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn neg(&self) -> Self {
        SymmetricMatrix(self.0.neg())
    }

    /// First `(row, col)` with `row != col` and a positive entry.
    pub fn positive_off_diagonal(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| i != j && self.0[(i, j)].is_positive())
    }
}

impl From<&IntersectionMatrix> for SymmetricMatrix {
    fn from(a: &IntersectionMatrix) -> Self {
        SymmetricMatrix(RationalMatrix::from(a))
    }
}

impl Index<(usize, usize)> for SymmetricMatrix {
    type Output = Rational;
    fn index(&self, ij: (usize, usize)) -> &Rational {
        &self.0[ij]
    }
}

/// `A = L D Lᵀ` with `L` unit lower triangular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ldlt {
    pub l: RationalMatrix,
    pub d: Vec<Rational>,
}

impl Ldlt {
    pub fn reconstruct(&self) -> RationalMatrix {
        let n = self.d.len();
        let mut ld = self.l.clone();
        for i in 0..n {
            for j in 0..n {
                ld.set(i, j, &self.l[(i, j)] * &self.d[j]);
            }
        }
        ld.mul(&self.l.transpose()).expect("square factors")
    }
}

/// Elimination hit a zero pivot at `index`, so the leading principal minor of
/// order `index + 1` vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PivotFailure {
    pub index: usize,
}

/// Symmetric elimination without row exchanges.
pub fn ldlt(a: &SymmetricMatrix) -> Result<Ldlt, PivotFailure> {
    let n = a.dim();
    let mut l = RationalMatrix::identity(n);
    let mut d: Vec<Rational> = Vec::with_capacity(n);
    for j in 0..n {
        let mut dj = a[(j, j)].clone();
        for k in 0..j {
            dj -= &l[(j, k)] * &l[(j, k)] * &d[k];
        }
        if dj.is_zero() {
            return Err(PivotFailure { index: j });
        }
        for i in j + 1..n {
            let mut s = a[(i, j)].clone();
            for k in 0..j {
                s -= &l[(i, k)] * &l[(j, k)] * &d[k];
            }
            l.set(i, j, s / &dj);
        }
        d.push(dj);
    }
    Ok(Ldlt { l, d })
}

/// Determinant by fraction-free elimination after clearing denominators
/// row by row.
pub fn determinant(m: &RationalMatrix) -> Result<Rational, LinalgError> {
    m.check_square()?;
    let n = m.rows;
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut scale = BigInt::one();
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let lcm = m.row(i).iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            scale *= &lcm;
            m.row(i).iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect();

    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !rows[r][k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            rows.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &rows[i][j] * &rows[k][k] - &rows[i][k] * &rows[k][j];
                rows[i][j] = v / &prev;
            }
            rows[i][k] = BigInt::zero();
        }
        prev = rows[k][k].clone();
    }
    Ok(Rational::new(sign * prev, scale))
}

/// The `n` leading principal minors, orders `1..=n`.
pub fn leading_principal_minors(a: &SymmetricMatrix) -> Vec<Rational> {
    (1..=a.dim()).map(|k| determinant(&a.matrix().leading(k)).expect("leading blocks are square")).collect()
}

/// Sylvester's criterion: every leading principal minor is positive.
pub fn is_positive_definite(a: &SymmetricMatrix) -> bool {
    leading_principal_minors(a).iter().all(Signed::is_positive)
}

pub fn is_negative_definite(a: &SymmetricMatrix) -> bool {
    is_positive_definite(&a.neg())
}

/// Positive definiteness read off the `L D Lᵀ` pivots.
pub fn is_positive_definite_ldlt(a: &SymmetricMatrix) -> bool {
    ldlt(a).is_ok_and(|f| f.d.iter().all(Signed::is_positive))
}

fn check_certificate_hypothesis(a: &SymmetricMatrix) -> Result<(), LinalgError> {
    match a.positive_off_diagonal() {
        Some((row, col)) => Err(LinalgError::HypothesisViolation { row, col }),
        None => Ok(()),
    }
}

/// Checks that `v > 0` and `A v > 0` entrywise. `A` must have non-positive
/// off-diagonal entries; a `true` result then proves `A` positive definite.
pub fn verify_certificate(a: &SymmetricMatrix, v: &[Rational]) -> Result<bool, LinalgError> {
    check_certificate_hypothesis(a)?;
    let av = a.matrix().mul_vec(v)?;
    Ok(v.iter().all(Signed::is_positive) && av.iter().all(Signed::is_positive))
}

/// Solves `A v = (1, …, 1)` and returns `v` if it is entrywise positive.
pub fn find_certificate(a: &SymmetricMatrix) -> Result<Vec<Rational>, LinalgError> {
    check_certificate_hypothesis(a)?;
    let ones = vec![Rational::one(); a.dim()];
    let v = match solve_linear(a.matrix(), &ones) {
        Ok(v) => v,
        Err(LinalgError::Singular) => return Err(LinalgError::CertificateNotFound(NotFoundReason::Singular)),
        Err(e) => return Err(e),
    };
    match v.iter().position(|x| !x.is_positive()) {
        Some(index) => Err(LinalgError::CertificateNotFound(NotFoundReason::NotPositive { index })),
        None => Ok(v),
    }
}

/// Gauss-Jordan elimination; the pivot is the first nonzero entry at or
/// below the diagonal.
pub fn solve_linear(a: &RationalMatrix, b: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
    a.check_square()?;
    let n = a.rows;
    if b.len() != n {
        return Err(LinalgError::DimensionMismatch { expected: n, found: b.len() });
    }
    let mut aug: Vec<Vec<Rational>> =
        (0..n).map(|i| a.row(i).iter().cloned().chain([b[i].clone()]).collect()).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !aug[r][col].is_zero()).ok_or(LinalgError::Singular)?;
        aug.swap(p, col);
        let pivot = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
    }
    Ok(aug.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}
