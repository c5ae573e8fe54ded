//! Matrix algebras M_d with the twisted trace forms eps(a) = Tr(u a).

use std::sync::Arc;

use super::BuilderError;
use crate::algebra::Algebra;
use crate::frobenius::{FrobeniusStructure, RationalSeries};
use crate::linalg::{invert, LinalgError, Matrix};
use crate::scalar::{FieldSpec, Scalar};

/// Expected invariants of eps = Tr(u .) on M_d, for cross-checking:
/// lambda = Tr(u^{-1}) when nonzero, lambda' = Tr(u), dim_1 and the series.
#[derive(Debug, Clone)]
pub struct MatrixPrediction {
    pub lambda: Option<Scalar>,
    pub lambda_prime: Scalar,
    pub dim1: Scalar,
    pub series: RationalSeries,
}

pub(crate) fn matrix_algebra_labeled(
    field: FieldSpec,
    d: usize,
    prefix: &str,
) -> Result<Arc<Algebra>, BuilderError> {
    if d == 0 {
        return Err(BuilderError::UnsupportedOrder(0));
    }
    let idx = |i: usize, j: usize| i * d + j;
    let mut labels = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            labels.push(format!("{prefix}E{}{}", i + 1, j + 1));
        }
    }
    // E_ij E_kl = delta_jk E_il
    let mut structure = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for l in 0..d {
                structure.push((idx(i, j), idx(j, l), idx(i, l), Scalar::one(field)));
            }
        }
    }
    let mut unit = vec![Scalar::zero(field); d * d];
    for i in 0..d {
        unit[idx(i, i)] = Scalar::one(field);
    }
    Ok(Algebra::new(field, labels, &structure, unit)?)
}

/// M_d with matrix units E_ij in row-major basis order.
pub fn matrix_algebra(field: FieldSpec, d: usize) -> Result<Arc<Algebra>, BuilderError> {
    matrix_algebra_labeled(field, d, "")
}

/// The Frobenius form eps(a) = Tr(u a) on M_d, together with its predicted
/// invariants. `u` must be an invertible d x d matrix.
pub fn matrix_frobenius(
    d: usize,
    u: &Matrix,
) -> Result<(FrobeniusStructure, MatrixPrediction), BuilderError> {
    if u.rows() != d || u.cols() != d {
        return Err(BuilderError::BadBlockSpec(format!(
            "twisting matrix is {}x{}, need {d}x{d}",
            u.rows(),
            u.cols()
        )));
    }
    let field = u.field();
    let u_inv = invert(u).map_err(|e| match e {
        LinalgError::Singular => BuilderError::NotInvertible,
        other => BuilderError::Linalg(other),
    })?;
    let algebra = matrix_algebra(field, d)?;
    // eps(E_ij) = Tr(u E_ij) = u_ji
    let mut eps = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            eps.push(u.get(j, i).clone());
        }
    }
    let structure = FrobeniusStructure::new(algebra, eps)?;
    let tr_u = u.trace();
    let tr_u_inv = u_inv.trace();
    let lambda = if tr_u_inv.is_zero() {
        None
    } else {
        Some(tr_u_inv.clone())
    };
    let series = RationalSeries::new(
        field,
        vec![tr_u.clone()],
        vec![Scalar::one(field), tr_u_inv.neg()],
    );
    let prediction = MatrixPrediction {
        lambda,
        lambda_prime: tr_u.clone(),
        dim1: &tr_u * &tr_u_inv,
        series,
    };
    Ok((structure, prediction))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(n: i64) -> Scalar {
        Scalar::from_int(FieldSpec::Rational, n)
    }

    fn diag(entries: &[i64]) -> Matrix {
        let f = FieldSpec::Rational;
        let mut m = Matrix::zero(f, entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, qi(e));
        }
        m
    }

    #[test]
    fn identity_twist_is_symmetric_quasispecial() {
        let (f, pred) = matrix_frobenius(2, &diag(&[1, 1])).unwrap();
        let c = f.classify().unwrap();
        assert!(c.symmetric);
        assert_eq!(c.quasispecial, Some(qi(2)));
        assert_eq!(c.fdim, qi(4));
        assert_eq!(pred.dim1, qi(4));
        // series 2/(1 - 2x)
        let expected = RationalSeries::new(
            FieldSpec::Rational,
            vec![qi(2)],
            vec![qi(1), qi(-2)],
        );
        assert!(pred.series.equivalent(&expected));
        assert!(f.rational_closed_form().unwrap().equivalent(&expected));
    }

    #[test]
    fn traceless_inverse_twist_is_weakly_symmetric() {
        let (f, pred) = matrix_frobenius(2, &diag(&[1, -1])).unwrap();
        let c = f.classify().unwrap();
        assert!(!c.symmetric && c.weakly_symmetric);
        assert_eq!(c.quasispecial, None);
        assert_eq!(c.fdim, qi(0));
        assert!(pred.lambda.is_none());
    }

    #[test]
    fn non_scalar_twist_is_asymmetric() {
        let fld = FieldSpec::Rational;
        let mut u = Matrix::identity(fld, 2);
        u.set(0, 1, qi(1));
        let (f, _) = matrix_frobenius(2, &u).unwrap();
        assert!(!f.classify().unwrap().symmetric);
    }

    #[test]
    fn singular_twist_rejected() {
        assert!(matches!(
            matrix_frobenius(2, &diag(&[1, 0])),
            Err(BuilderError::NotInvertible)
        ));
    }
}
