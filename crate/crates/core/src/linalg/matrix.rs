//! Dense matrices with exact Gaussian elimination.
//!
//! Pivoting picks the first nonzero entry in each column; scalars are
//! canonical, so elimination is deterministic and results are reproducible.

use thiserror::Error;

use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("entries live in different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("sequence does not close into a linear recurrence yet")]
    NotFound,
}

/// Row-major dense matrix over one scalar field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let s = f(r, c);
                if s.field() != field {
                    return Err(LinalgError::FieldMismatch);
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(LinalgError::ShapeMismatch("ragged rows".into()));
        }
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        if data.iter().any(|s| s.field() != field) {
            return Err(LinalgError::FieldMismatch);
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in (r + 1)..self.cols {
                if self.get(r, c) != self.get(c, r) {
                    return false;
                }
            }
        }
        true
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        let mut acc = Scalar::zero(self.field);
        for i in 0..self.rows {
            acc += self.get(i, i);
        }
        acc
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        assert_eq!(self.field, rhs.field, "matmul field mismatch");
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).clone();
                    out.set(r, c, &cur + &(a * b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "mul_vec shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero(self.field);
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += &(a * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pivot_row != row {
                for c in 0..self.cols {
                    self.data
                        .swap(pivot_row * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).inv().expect("pivot nonzero");
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c) - &(&factor * self.get(row, c));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref().len()
    }
}

/// Determinant by fraction-free-enough Gaussian elimination (exact field ops,
/// sign tracked through row swaps).
pub fn determinant(m: &Matrix) -> Scalar {
    assert_eq!(m.rows(), m.cols(), "determinant of non-square matrix");
    let n = m.rows();
    let field = m.field();
    let mut work = m.clone();
    let mut det = Scalar::one(field);
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !work.get(r, col).is_zero()) else {
            return Scalar::zero(field);
        };
        if pivot_row != col {
            for c in 0..n {
                let a = work.get(pivot_row, c).clone();
                let b = work.get(col, c).clone();
                work.set(pivot_row, c, b);
                work.set(col, c, a);
            }
            det = det.neg();
        }
        let pivot = work.get(col, col).clone();
        det = &det * &pivot;
        let inv = pivot.inv().expect("pivot nonzero");
        for r in (col + 1)..n {
            if work.get(r, col).is_zero() {
                continue;
            }
            let factor = work.get(r, col) * &inv;
            for c in col..n {
                let v = work.get(r, c) - &(&factor * work.get(col, c));
                work.set(r, c, v);
            }
        }
    }
    det
}

/// One solution of M x = b if the system is consistent, `None` otherwise.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::ShapeMismatch(format!(
            "rhs length {} vs {} rows",
            b.len(),
            m.rows()
        )));
    }
    if b.iter().any(|s| s.field() != m.field()) {
        return Err(LinalgError::FieldMismatch);
    }
    let mut aug = Matrix::zero(m.field(), m.rows(), m.cols() + 1);
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, m.cols(), b[r].clone());
    }
    let pivots = aug.rref();
    // A pivot in the augmented column means the system is inconsistent.
    if pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(m.field()); m.cols()];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug.get(row, m.cols()).clone();
    }
    Ok(Some(x))
}

pub fn invert(m: &Matrix) -> Result<Matrix, LinalgError> {
    if m.rows() != m.cols() {
        return Err(LinalgError::ShapeMismatch("invert needs square".into()));
    }
    let n = m.rows();
    let mut aug = Matrix::zero(m.field(), n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, n + r, Scalar::one(m.field()));
    }
    let pivots = aug.rref();
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return Err(LinalgError::Singular);
    }
    let mut out = Matrix::zero(m.field(), n, n);
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, aug.get(r, n + c).clone());
        }
    }
    Ok(out)
}

/// Basis of the right kernel {x : Mx = 0}.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Scalar>> {
    let mut work = m.clone();
    let pivots = work.rref();
    let field = m.field();
    let pivot_set: Vec<usize> = pivots.clone();
    let mut basis = Vec::new();
    for free in 0..m.cols() {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(field); m.cols()];
        v[free] = Scalar::one(field);
        for (row, &col) in pivot_set.iter().enumerate() {
            v[col] = work.get(row, free).neg();
        }
        basis.push(v);
    }
    basis
}

/// Monic minimal polynomial of the vector sequence v_0, v_1, ...: the smallest
/// k with v_k + c_{k-1} v_{k-1} + ... + c_0 v_0 = 0. Returns ascending
/// coefficients [c_0, ..., c_{k-1}, 1]. `NotFound` means the sequence is too
/// short to close; callers extend it and retry.
pub fn minimal_polynomial(seq: &[Vec<Scalar>]) -> Result<Vec<Scalar>, LinalgError> {
    if seq.is_empty() {
        return Err(LinalgError::NotFound);
    }
    let field = seq[0][0].field();
    let dim = seq[0].len();
    if seq.iter().any(|v| v.len() != dim) {
        return Err(LinalgError::ShapeMismatch("ragged sequence".into()));
    }
    for k in 0..seq.len() {
        if k == 0 {
            if seq[0].iter().all(Scalar::is_zero) {
                return Ok(vec![Scalar::one(field)]);
            }
            continue;
        }
        let cols = Matrix::from_fn(field, dim, k, |r, c| seq[c][r].clone())?;
        let target: Vec<Scalar> = seq[k].iter().map(Scalar::neg).collect();
        if let Some(c) = solve(&cols, &target)? {
            let mut out = c;
            out.push(Scalar::one(field));
            return Ok(out);
        }
    }
    Err(LinalgError::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn qq(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(FieldSpec::Rational, n, d)
    }

    fn qi(n: i64) -> Scalar {
        Scalar::from_int(FieldSpec::Rational, n)
    }

    #[test]
    fn solve_identity_and_scalar() {
        let f = FieldSpec::Rational;
        let i3 = Matrix::identity(f, 3);
        let b = vec![qi(1), qi(2), qi(3)];
        assert_eq!(solve(&i3, &b).unwrap().unwrap(), b);
        let m = Matrix::from_rows(f, vec![vec![qi(2)]]).unwrap();
        assert_eq!(solve(&m, &[qi(1)]).unwrap().unwrap(), vec![qq(1, 2)]);
    }

    #[test]
    fn solve_multiply_back() {
        // 3x3 invertible over Q; the oracle is multiplying the solution back.
        let f = FieldSpec::Rational;
        let m = Matrix::from_rows(
            f,
            vec![
                vec![qi(2), qi(1), qi(-1)],
                vec![qi(-3), qi(-1), qi(2)],
                vec![qi(-2), qi(1), qi(2)],
            ],
        )
        .unwrap();
        let b = vec![qi(8), qi(-11), qi(-3)];
        let x = solve(&m, &b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), b);
    }

    #[test]
    fn solve_inconsistent() {
        let f = FieldSpec::Rational;
        let m = Matrix::from_rows(f, vec![vec![qi(1), qi(1)], vec![qi(1), qi(1)]]).unwrap();
        assert_eq!(solve(&m, &[qi(0), qi(1)]).unwrap(), None);
    }

    #[test]
    fn invert_upper_triangular() {
        let f = FieldSpec::Rational;
        assert_eq!(
            invert(&Matrix::identity(f, 4)).unwrap(),
            Matrix::identity(f, 4)
        );
        let m = Matrix::from_rows(f, vec![vec![qi(1), qi(1)], vec![qi(0), qi(1)]]).unwrap();
        let expected =
            Matrix::from_rows(f, vec![vec![qi(1), qi(-1)], vec![qi(0), qi(1)]]).unwrap();
        assert_eq!(invert(&m).unwrap(), expected);
    }

    #[test]
    fn invert_multiply_back_cyclotomic() {
        use crate::scalar::root_of_unity;
        let f = FieldSpec::cyclotomic(3).unwrap();
        let z = root_of_unity(f, 1).unwrap();
        // Deterministic "random-looking" 4x4 with zeta entries.
        let m = Matrix::from_fn(f, 4, 4, |r, c| {
            let base = Scalar::from_int(f, ((r * 7 + c * 3) % 5) as i64 + 1);
            if (r + c) % 2 == 0 {
                &base + &z
            } else {
                base
            }
        })
        .unwrap();
        let inv = invert(&m).unwrap();
        assert_eq!(m.matmul(&inv), Matrix::identity(f, 4));
        assert_eq!(inv.matmul(&m), Matrix::identity(f, 4));
        assert_eq!(invert(&inv).unwrap(), m);
    }

    #[test]
    fn nullspace_cases() {
        let f = FieldSpec::Rational;
        assert_eq!(nullspace(&Matrix::zero(f, 2, 2)).len(), 2);
        assert!(nullspace(&Matrix::identity(f, 3)).is_empty());
        let m = Matrix::from_rows(f, vec![vec![qi(1), qi(1)], vec![qi(1), qi(1)]]).unwrap();
        let basis = nullspace(&m);
        assert_eq!(basis.len(), 1);
        assert_eq!(m.mul_vec(&basis[0]), vec![qi(0), qi(0)]);
        assert_eq!(basis.len(), m.cols() - m.rank());
    }

    #[test]
    fn minimal_polynomial_small() {
        // Powers of 1: t - 1.
        let ones = vec![vec![qi(1)], vec![qi(1)], vec![qi(1)]];
        assert_eq!(minimal_polynomial(&ones).unwrap(), vec![qi(-1), qi(1)]);
        // Powers of 0 starting from 1: t.
        let zeros = vec![vec![qi(1)], vec![qi(0)], vec![qi(0)]];
        assert_eq!(minimal_polynomial(&zeros).unwrap(), vec![qi(0), qi(1)]);
        // Too short to close.
        let open = vec![vec![qi(1), qi(0)], vec![qi(0), qi(1)]];
        assert_eq!(minimal_polynomial(&open), Err(LinalgError::NotFound));
    }
}
