//! Finite-dimensional unital associative algebras given by structure constants.

mod io;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exec;
use crate::linalg::{nullspace, solve, LinalgError, Matrix};
use crate::scalar::{FieldSpec, Scalar, ScalarError};

pub use io::{algebra_from_json, algebra_to_json, AlgebraFile};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum AlgebraError {
    #[error("scalar field does not match the algebra's field")]
    FieldMismatch,
    #[error("associativity fails at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails on basis element {0}")]
    BadUnit(usize),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("wrong coefficient count: got {got}, need {need}")]
    WrongLength { got: usize, need: usize },
    #[error("scalar error: {0}")]
    Scalar(#[from] ScalarError),
    #[error("linear algebra error: {0}")]
    Linalg(#[from] LinalgError),
    #[error("algebra file error: {0}")]
    File(String),
}

/// Sparse coefficient vector: sorted (index, value) pairs, no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

fn sparsify(dense: &[Scalar]) -> SparseVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, s)| (i, s.clone()))
        .collect()
}

/// A unital associative algebra of dimension N over an exact field, with
/// e_i e_j = sum_k c_{ij}^k e_k stored per basis pair. Basis order is part of
/// the algebra's identity; all coefficient vectors refer to it.
#[derive(Debug, PartialEq)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    labels: Vec<String>,
    /// products[i * dim + j] = sparse coefficients of e_i e_j.
    products: Vec<SparseVec>,
    unit: Vec<Scalar>,
}

impl Algebra {
    /// Builds and fully validates an algebra from sparse structure quadruples
    /// (i, j, k, c) meaning e_i e_j has coefficient c on e_k.
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        structure: &[(usize, usize, usize, Scalar)],
        unit: Vec<Scalar>,
    ) -> Result<Arc<Algebra>, AlgebraError> {
        let a = Self::assemble(field, labels, structure, unit)?;
        a.validate()?;
        Ok(Arc::new(a))
    }

    /// Builds without the O(N^3) associativity sweep. For programmatically
    /// generated tables whose construction is verified elsewhere.
    pub fn new_trusted(
        field: FieldSpec,
        labels: Vec<String>,
        structure: &[(usize, usize, usize, Scalar)],
        unit: Vec<Scalar>,
    ) -> Result<Arc<Algebra>, AlgebraError> {
        Ok(Arc::new(Self::assemble(field, labels, structure, unit)?))
    }

    fn assemble(
        field: FieldSpec,
        labels: Vec<String>,
        structure: &[(usize, usize, usize, Scalar)],
        unit: Vec<Scalar>,
    ) -> Result<Algebra, AlgebraError> {
        let dim = labels.len();
        if unit.len() != dim {
            return Err(AlgebraError::WrongLength {
                got: unit.len(),
                need: dim,
            });
        }
        if unit.iter().any(|s| s.field() != field) {
            return Err(AlgebraError::FieldMismatch);
        }
        let mut dense: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(field); dim]; dim * dim];
        for &(i, j, k, ref c) in structure {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(AlgebraError::IndexOutOfRange { index: idx, dim });
                }
            }
            if c.field() != field {
                return Err(AlgebraError::FieldMismatch);
            }
            dense[i * dim + j][k] = &dense[i * dim + j][k] + c;
        }
        let products = dense.iter().map(|v| sparsify(v)).collect();
        Ok(Algebra {
            field,
            dim,
            labels,
            products,
            unit,
        })
    }

    /// Exhaustive associativity and unit-law check.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            let left = self.mul_basis_vec(&self.unit, i);
            let right = self.mul_vec_basis(i, &self.unit);
            let ei = self.basis_coeffs(i);
            if left != ei || right != ei {
                return Err(AlgebraError::BadUnit(i));
            }
        }
        exec::try_for_each(self.dim, |i| {
            for j in 0..self.dim {
                let ij = self.product_coeffs(i, j);
                for k in 0..self.dim {
                    // (e_i e_j) e_k vs e_i (e_j e_k)
                    let lhs = self.mul_sparse_basis(&ij, k);
                    let jk = self.product_coeffs(j, k);
                    let rhs = self.mul_basis_sparse(i, &jk);
                    if lhs != rhs {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
            Ok(())
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit_coeffs(&self) -> &[Scalar] {
        &self.unit
    }

    fn basis_coeffs(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(self.field); self.dim];
        v[i] = Scalar::one(self.field);
        v
    }

    /// Sparse structure constants of e_i e_j.
    pub fn product_coeffs(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim + j]
    }

    fn mul_sparse_basis(&self, a: &SparseVec, k: usize) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(self.field); self.dim];
        for (m, c) in a {
            for (t, w) in self.product_coeffs(*m, k) {
                acc[*t] = &acc[*t] + &(c * w);
            }
        }
        acc
    }

    fn mul_basis_sparse(&self, i: usize, b: &SparseVec) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(self.field); self.dim];
        for (m, c) in b {
            for (t, w) in self.product_coeffs(i, *m) {
                acc[*t] = &acc[*t] + &(c * w);
            }
        }
        acc
    }

    fn mul_vec_basis(&self, i: usize, a: &[Scalar]) -> Vec<Scalar> {
        self.mul_sparse_basis(&sparsify(a), i)
    }

    fn mul_basis_vec(&self, a: &[Scalar], i: usize) -> Vec<Scalar> {
        // unit * e_i with unit given densely
        let mut acc = vec![Scalar::zero(self.field); self.dim];
        for (m, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, w) in self.product_coeffs(m, i) {
                acc[*t] = &acc[*t] + &(c * w);
            }
        }
        acc
    }

    pub fn element(self: &Arc<Self>, coeffs: Vec<Scalar>) -> Result<Element, AlgebraError> {
        if coeffs.len() != self.dim {
            return Err(AlgebraError::WrongLength {
                got: coeffs.len(),
                need: self.dim,
            });
        }
        if coeffs.iter().any(|s| s.field() != self.field) {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(Element {
            algebra: Arc::clone(self),
            coeffs,
        })
    }

    pub fn basis_element(self: &Arc<Self>, i: usize) -> Element {
        assert!(i < self.dim);
        Element {
            algebra: Arc::clone(self),
            coeffs: self.basis_coeffs(i),
        }
    }

    pub fn zero_element(self: &Arc<Self>) -> Element {
        Element {
            algebra: Arc::clone(self),
            coeffs: vec![Scalar::zero(self.field); self.dim],
        }
    }

    pub fn unit_element(self: &Arc<Self>) -> Element {
        Element {
            algebra: Arc::clone(self),
            coeffs: self.unit.clone(),
        }
    }
}

/// An algebra element as a coefficient vector over the stored basis order.
#[derive(Debug, Clone)]
pub struct Element {
    algebra: Arc<Algebra>,
    coeffs: Vec<Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.coeffs == other.coeffs
    }
}

fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Element {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, factor: &Scalar) -> Element {
        Element {
            algebra: Arc::clone(&self.algebra),
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Element {
        let mut acc = self.algebra.unit_element();
        for _ in 0..exp {
            acc = multiply(&acc, self).expect("same algebra");
        }
        acc
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert!(same_algebra(&self.algebra, &rhs.algebra), "algebra mismatch");
        Element {
            algebra: Arc::clone(&self.algebra),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert!(same_algebra(&self.algebra, &rhs.algebra), "algebra mismatch");
        Element {
            algebra: Arc::clone(&self.algebra),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        multiply(self, rhs).expect("algebra mismatch")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("({}) {}", c, self.algebra.label(i)));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Bilinear extension of the structure constants.
pub fn multiply(a: &Element, b: &Element) -> Result<Element, AlgebraError> {
    if !same_algebra(&a.algebra, &b.algebra) {
        return Err(AlgebraError::AlgebraMismatch);
    }
    let alg = &a.algebra;
    let mut acc = vec![Scalar::zero(alg.field); alg.dim];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let ab = ai * bj;
            for (k, c) in alg.product_coeffs(i, j) {
                acc[*k] = &acc[*k] + &(&ab * c);
            }
        }
    }
    Ok(Element {
        algebra: Arc::clone(alg),
        coeffs: acc,
    })
}

/// Matrix of left multiplication x -> a x in the stored basis.
pub fn left_mult_matrix(a: &Element) -> Matrix {
    let alg = &a.algebra;
    let mut m = Matrix::zero(alg.field, alg.dim, alg.dim);
    for j in 0..alg.dim {
        let col = alg.mul_vec_basis(j, &a.coeffs);
        for (i, v) in col.into_iter().enumerate() {
            if !v.is_zero() {
                m.set(i, j, v);
            }
        }
    }
    m
}

/// Matrix of right multiplication x -> x a in the stored basis.
pub fn right_mult_matrix(a: &Element) -> Matrix {
    let alg = &a.algebra;
    let mut m = Matrix::zero(alg.field, alg.dim, alg.dim);
    for j in 0..alg.dim {
        let ej = alg.basis_element(j);
        let prod = multiply(&ej, a).expect("same algebra");
        for (i, v) in prod.coeffs.into_iter().enumerate() {
            if !v.is_zero() {
                m.set(i, j, v);
            }
        }
    }
    m
}

/// Two-sided inverse found by solving L_u x = 1 and verifying x u = 1 too.
pub fn element_inverse(u: &Element) -> Result<Element, AlgebraError> {
    let alg = &u.algebra;
    let lm = left_mult_matrix(u);
    let sol = solve(&lm, alg.unit_coeffs())?;
    let x = match sol {
        Some(x) => x,
        None => return Err(AlgebraError::NotInvertible),
    };
    let candidate = alg.element(x)?;
    let back = multiply(&candidate, u)?;
    if back != alg.unit_element() {
        return Err(AlgebraError::NotInvertible);
    }
    Ok(candidate)
}

/// Basis of the center {x : x e_i = e_i x for all i}, via the nullspace of the
/// stacked commutator system.
pub fn center(alg: &Arc<Algebra>) -> Vec<Element> {
    let n = alg.dim();
    let field = alg.field();
    // Rows indexed by (j, k): sum_i x_i (c_{ij}^k - c_{ji}^k) = 0.
    let mut m = Matrix::zero(field, n * n, n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in alg.product_coeffs(i, j) {
                let r = j * n + k;
                let cur = m.get(r, i).clone();
                m.set(r, i, &cur + c);
            }
            for (k, c) in alg.product_coeffs(j, i) {
                let r = j * n + k;
                let cur = m.get(r, i).clone();
                m.set(r, i, &cur - c);
            }
        }
    }
    nullspace(&m)
        .into_iter()
        .map(|v| alg.element(v).expect("nullspace vector"))
        .collect()
}

/// Basis of the span of all commutators e_i e_j - e_j e_i.
pub fn commutator_subspace(alg: &Arc<Algebra>) -> Vec<Element> {
    let n = alg.dim();
    let field = alg.field();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = vec![Scalar::zero(field); n];
            for (k, c) in alg.product_coeffs(i, j) {
                v[*k] = &v[*k] + c;
            }
            for (k, c) in alg.product_coeffs(j, i) {
                v[*k] = &v[*k] - c;
            }
            if v.iter().any(|s| !s.is_zero()) {
                rows.push(v);
            }
        }
    }
    if rows.is_empty() {
        return Vec::new();
    }
    let nr = rows.len();
    let mut m = Matrix::from_rows(field, rows).expect("uniform rows");
    let pivots = {
        // Row-reduce; the nonzero rows of the echelon form span the subspace.
        let mut work = m.clone();
        let p = work_rref(&mut work);
        m = work;
        p
    };
    let _ = nr;
    pivots
        .iter()
        .enumerate()
        .map(|(row, _)| {
            let v: Vec<Scalar> = (0..n).map(|c| m.get(row, c).clone()).collect();
            alg.element(v).expect("echelon row")
        })
        .collect()
}

fn work_rref(m: &mut Matrix) -> Vec<usize> {
    // Thin wrapper so commutator_subspace can reuse the private matrix rref.
    let mut pivots = Vec::new();
    let rows = m.rows();
    let cols = m.cols();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pr) = (row..rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if pr != row {
            for c in 0..cols {
                let a = m.get(pr, c).clone();
                let b = m.get(row, c).clone();
                m.set(pr, c, b);
                m.set(row, c, a);
            }
        }
        let inv = m.get(row, col).inv().expect("pivot nonzero");
        for c in col..cols {
            let v = m.get(row, c) * &inv;
            m.set(row, c, v);
        }
        for r in 0..rows {
            if r == row || m.get(r, col).is_zero() {
                continue;
            }
            let factor = m.get(r, col).clone();
            for c in col..cols {
                let v = m.get(r, c) - &(&factor * m.get(row, c));
                m.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Block-diagonal sum: basis of A followed by basis of B, unit (1_A, 1_B).
pub fn direct_sum(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<Arc<Algebra>, AlgebraError> {
    if a.field() != b.field() {
        return Err(AlgebraError::FieldMismatch);
    }
    let field = a.field();
    let dim = a.dim() + b.dim();
    let mut labels = a.labels().to_vec();
    labels.extend_from_slice(b.labels());
    let mut structure = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            for (k, c) in a.product_coeffs(i, j) {
                structure.push((i, j, *k, c.clone()));
            }
        }
    }
    let off = a.dim();
    for i in 0..b.dim() {
        for j in 0..b.dim() {
            for (k, c) in b.product_coeffs(i, j) {
                structure.push((off + i, off + j, off + k, c.clone()));
            }
        }
    }
    let mut unit = a.unit_coeffs().to_vec();
    unit.extend_from_slice(b.unit_coeffs());
    let alg = Algebra::assemble(field, labels, &structure, unit)?;
    debug_assert_eq!(alg.dim, dim);
    Ok(Arc::new(alg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn qi(n: i64) -> Scalar {
        Scalar::from_int(FieldSpec::Rational, n)
    }

    fn one_dim() -> Arc<Algebra> {
        Algebra::new(
            FieldSpec::Rational,
            vec!["e".into()],
            &[(0, 0, 0, qi(1))],
            vec![qi(1)],
        )
        .unwrap()
    }

    /// Matrix units E_{ij} E_{kl} = delta_{jk} E_{il}, row-major basis order.
    fn m2() -> Arc<Algebra> {
        let d = 2usize;
        let mut structure = Vec::new();
        let idx = |i: usize, j: usize| i * d + j;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        if j == k {
                            structure.push((idx(i, j), idx(k, l), idx(i, l), qi(1)));
                        }
                    }
                }
            }
        }
        let mut unit = vec![qi(0); d * d];
        unit[idx(0, 0)] = qi(1);
        unit[idx(1, 1)] = qi(1);
        Algebra::new(
            FieldSpec::Rational,
            vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()],
            &structure,
            unit,
        )
        .unwrap()
    }

    #[test]
    fn one_dimensional_field_algebra() {
        let a = one_dim();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.unit_element(), a.basis_element(0));
    }

    #[test]
    fn matrix_units_multiply() {
        let a = m2();
        let e11 = a.basis_element(0);
        let e12 = a.basis_element(1);
        assert_eq!(multiply(&e11, &e12).unwrap(), e12);
        assert_eq!(multiply(&a.unit_element(), &e12).unwrap(), e12);
        // center of a matrix algebra is the scalars
        let z = center(&a);
        assert_eq!(z.len(), 1);
    }

    #[test]
    fn corrupted_table_rejected() {
        // E11 * E12 = E21 breaks associativity.
        let d = 2usize;
        let idx = |i: usize, j: usize| i * d + j;
        let mut structure = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        if j == k {
                            let target = if (i, j, k, l) == (0, 0, 0, 1) {
                                idx(1, 0)
                            } else {
                                idx(i, l)
                            };
                            structure.push((idx(i, j), idx(k, l), target, qi(1)));
                        }
                    }
                }
            }
        }
        let mut unit = vec![qi(0); 4];
        unit[0] = qi(1);
        unit[3] = qi(1);
        let result = Algebra::new(
            FieldSpec::Rational,
            vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()],
            &structure,
            unit,
        );
        assert!(matches!(
            result,
            Err(AlgebraError::NotAssociative(..)) | Err(AlgebraError::BadUnit(..))
        ));
    }

    #[test]
    fn left_mult_and_inverse() {
        let a = m2();
        assert_eq!(
            left_mult_matrix(&a.unit_element()),
            Matrix::identity(FieldSpec::Rational, 4)
        );
        // E11 is a rank-2 projector as an operator on the 4-dim algebra.
        let lm = left_mult_matrix(&a.basis_element(0));
        assert_eq!(lm.rank(), 2);
        // unit inverts to unit; E11 is not invertible
        assert_eq!(
            element_inverse(&a.unit_element()).unwrap(),
            a.unit_element()
        );
        assert_eq!(
            element_inverse(&a.basis_element(0)),
            Err(AlgebraError::NotInvertible)
        );
        // diag(1,2) inverts to diag(1,1/2)
        let u = a
            .element(vec![qi(1), qi(0), qi(0), qi(2)])
            .unwrap();
        let inv = element_inverse(&u).unwrap();
        assert_eq!(
            inv,
            a.element(vec![
                qi(1),
                qi(0),
                qi(0),
                Scalar::from_ratio(FieldSpec::Rational, 1, 2)
            ])
            .unwrap()
        );
    }

    #[test]
    fn trace_of_left_mults_brute_force() {
        // Tr(L_a L_b) = d * Tr(ab) on M_d, checked by brute force at d = 2.
        let a = m2();
        let x = a
            .element(vec![qi(3), qi(-1), qi(2), qi(5)])
            .unwrap();
        let y = a
            .element(vec![qi(1), qi(4), qi(0), qi(-2)])
            .unwrap();
        let lhs = left_mult_matrix(&x).matmul(&left_mult_matrix(&y)).trace();
        let xy = multiply(&x, &y).unwrap();
        // trace of the 2x2 matrix xy = coeff on E11 + coeff on E22
        let tr_xy = xy.coeff(0) + xy.coeff(3);
        assert_eq!(lhs, &qi(2) * &tr_xy);
    }

    #[test]
    fn commutators_and_direct_sum() {
        let k = one_dim();
        let kk = direct_sum(&k, &k).unwrap();
        assert_eq!(kk.dim(), 2);
        assert!(commutator_subspace(&kk).is_empty());
        assert_eq!(kk.unit_coeffs(), &[qi(1), qi(1)]);
        let six = direct_sum(&kk, &m2()).unwrap();
        assert_eq!(six.dim(), 6);
        assert_eq!(center(&six).len(), 3);
        // commutators of M2 give the traceless 3-dim subspace
        assert_eq!(commutator_subspace(&m2()).len(), 3);
    }
}
