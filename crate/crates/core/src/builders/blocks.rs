//! Semisimple block sums ⊕ M_{d_i} and their distinguished Frobenius forms.
//!
//! The block-wise form eps|_{M_d} = d Tr is the unique symmetric special one;
//! twisting it by block-diagonal invertibles walks the rest of the moduli.

use std::sync::Arc;

use super::matrix::matrix_algebra_labeled;
use super::BuilderError;
use crate::algebra::{direct_sum, Algebra};
use crate::frobenius::{FrobeniusStructure, RationalSeries};
use crate::linalg::{invert, LinalgError, Matrix};
use crate::scalar::{FieldSpec, Scalar};

/// Expected invariants of a block twist, for cross-checking.
#[derive(Debug, Clone)]
pub struct BlockPrediction {
    pub lambda_prime: Scalar,
    pub dim1: Scalar,
    pub series: RationalSeries,
}

/// ⊕_i M_{d_i}, blocks in order, matrix units row-major inside each block.
pub fn blocks_algebra(field: FieldSpec, dims: &[usize]) -> Result<Arc<Algebra>, BuilderError> {
    if dims.is_empty() {
        return Err(BuilderError::BadBlockSpec("no blocks".into()));
    }
    let mut acc: Option<Arc<Algebra>> = None;
    for (b, &d) in dims.iter().enumerate() {
        let block = matrix_algebra_labeled(field, d, &format!("b{b}:"))?;
        acc = Some(match acc {
            None => block,
            Some(current) => direct_sum(&current, &block)?,
        });
    }
    Ok(acc.expect("at least one block"))
}

/// Offset of block `b` in the basis of `blocks_algebra(dims)`.
fn block_offset(dims: &[usize], b: usize) -> usize {
    dims[..b].iter().map(|d| d * d).sum()
}

/// eps = ⊕ d_i Tr on ⊕ M_{d_i}: the symmetric special form.
pub fn semisimple_special_form(
    field: FieldSpec,
    dims: &[usize],
) -> Result<FrobeniusStructure, BuilderError> {
    let us: Vec<Matrix> = dims.iter().map(|&d| Matrix::identity(field, d)).collect();
    Ok(block_twist(field, dims, &us)?.0)
}

/// Twist of the special form by u = ⊕ u_i: eps_u(a_i) = d_i Tr(u_i a_i) per
/// block. Returns the structure and its predicted dimension data
/// dim1 = sum Tr(u_i) Tr(u_i^{-1}), series = sum d_i Tr(u_i)/(1 - d_i^{-1} Tr(u_i^{-1}) x).
pub fn block_twist(
    field: FieldSpec,
    dims: &[usize],
    us: &[Matrix],
) -> Result<(FrobeniusStructure, BlockPrediction), BuilderError> {
    if us.len() != dims.len() {
        return Err(BuilderError::BadBlockSpec(format!(
            "{} twisting blocks for {} block dims",
            us.len(),
            dims.len()
        )));
    }
    let algebra = blocks_algebra(field, dims)?;
    let mut eps = vec![Scalar::zero(field); algebra.dim()];
    let mut dim1 = Scalar::zero(field);
    let mut lambda_prime = Scalar::zero(field);
    let mut series = RationalSeries::constant(field, Scalar::zero(field));
    for (b, &d) in dims.iter().enumerate() {
        let u = &us[b];
        if u.rows() != d || u.cols() != d {
            return Err(BuilderError::BadBlockSpec(format!(
                "block {b} twist is {}x{}, need {d}x{d}",
                u.rows(),
                u.cols()
            )));
        }
        let u_inv = invert(u).map_err(|e| match e {
            LinalgError::Singular => BuilderError::NotInvertible,
            other => BuilderError::Linalg(other),
        })?;
        let off = block_offset(dims, b);
        let d_scalar = Scalar::from_int(field, d as i64);
        // eps_u(E_ij) = d Tr(u E_ij) = d u_ji
        for i in 0..d {
            for j in 0..d {
                eps[off + i * d + j] = &d_scalar * u.get(j, i);
            }
        }
        let tr_u = u.trace();
        let tr_u_inv = u_inv.trace();
        dim1 += &(&tr_u * &tr_u_inv);
        lambda_prime += &(&d_scalar * &tr_u);
        // d Tr(u) / (1 - Tr(u^{-1})/d * x)
        let block_series = RationalSeries::new(
            field,
            vec![&d_scalar * &tr_u],
            vec![
                Scalar::one(field),
                tr_u_inv.div(&d_scalar).expect("d nonzero").neg(),
            ],
        );
        series = series.add(&block_series);
    }
    let structure = FrobeniusStructure::new(algebra, eps)?;
    Ok((
        structure,
        BlockPrediction {
            lambda_prime,
            dim1,
            series,
        },
    ))
}

/// Weakly symmetric stratum: blocks in `included` get u_i = mu_i^{-1} I (so
/// they contribute d_i^2 to dim_1); the rest get a supplied invertible u_i
/// with Tr(u_i^{-1}) = 0 and contribute nothing.
pub fn weakly_symmetric_block_form(
    field: FieldSpec,
    dims: &[usize],
    included: &[(usize, Scalar)],
    excluded: &[(usize, Matrix)],
) -> Result<(FrobeniusStructure, BlockPrediction), BuilderError> {
    let mut us: Vec<Option<Matrix>> = vec![None; dims.len()];
    for (b, mu) in included {
        if *b >= dims.len() || us[*b].is_some() {
            return Err(BuilderError::BadBlockSpec(format!("bad block index {b}")));
        }
        if mu.is_zero() {
            return Err(BuilderError::NotInvertible);
        }
        us[*b] = Some(Matrix::from_fn(field, dims[*b], dims[*b], |r, c| {
            if r == c {
                mu.inv().expect("mu nonzero")
            } else {
                Scalar::zero(field)
            }
        })?);
    }
    for (b, u) in excluded {
        if *b >= dims.len() || us[*b].is_some() {
            return Err(BuilderError::BadBlockSpec(format!("bad block index {b}")));
        }
        let u_inv = invert(u).map_err(|e| match e {
            LinalgError::Singular => BuilderError::NotInvertible,
            other => BuilderError::Linalg(other),
        })?;
        if !u_inv.trace().is_zero() {
            return Err(BuilderError::BadBlockSpec(format!(
                "block {b}: excluded blocks need Tr(u^-1) = 0"
            )));
        }
        if dims[*b] == 1 {
            return Err(BuilderError::BadBlockSpec(
                "1x1 blocks cannot have traceless inverse".into(),
            ));
        }
        us[*b] = Some(u.clone());
    }
    let us: Vec<Matrix> = us
        .into_iter()
        .enumerate()
        .map(|(b, u)| u.ok_or(BuilderError::BadBlockSpec(format!("block {b} unassigned"))))
        .collect::<Result<_, _>>()?;
    let (structure, _) = block_twist(field, dims, &us)?;
    // Predicted data for the stratum itself.
    let mut dim1 = Scalar::zero(field);
    let mut lambda_prime = Scalar::zero(field);
    let mut series = RationalSeries::constant(field, Scalar::zero(field));
    for (b, mu) in included {
        let d = Scalar::from_int(field, (dims[*b] * dims[*b]) as i64);
        dim1 += &d;
        let d_sq_over_mu = d.div(mu).expect("mu nonzero");
        lambda_prime += &d_sq_over_mu;
        series = series.add(&RationalSeries::new(
            field,
            vec![d_sq_over_mu],
            vec![Scalar::one(field), mu.neg()],
        ));
    }
    Ok((
        structure,
        BlockPrediction {
            lambda_prime,
            dim1,
            series,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::center;

    fn qi(n: i64) -> Scalar {
        Scalar::from_int(FieldSpec::Rational, n)
    }

    #[test]
    fn special_form_on_1_1_2() {
        let f = FieldSpec::Rational;
        let s = semisimple_special_form(f, &[1, 1, 2]).unwrap();
        assert_eq!(s.algebra().dim(), 6);
        assert_eq!(center(s.algebra()).len(), 3);
        let c = s.classify().unwrap();
        assert!(c.special && c.symmetric);
        assert_eq!(c.fdim, qi(6));
        // B = 1 on the single M_2 block with eps = 2 Tr as well
        let s2 = semisimple_special_form(f, &[2]).unwrap();
        assert_eq!(s2.lollipop(), &s2.algebra().unit_element());
    }

    #[test]
    fn block_twist_dimension_sum() {
        let f = FieldSpec::Rational;
        let u0 = Matrix::from_fn(f, 1, 1, |_, _| qi(3)).unwrap();
        let u1 = Matrix::from_fn(f, 1, 1, |_, _| qi(1)).unwrap();
        let mut u2 = Matrix::identity(f, 2);
        u2.set(1, 1, qi(2));
        let (s, pred) = block_twist(f, &[1, 1, 2], &[u0, u1, u2]).unwrap();
        // dim1 = 3*(1/3) + 1 + (3)(3/2) = 1 + 1 + 9/2 = 13/2
        assert_eq!(pred.dim1, Scalar::from_ratio(f, 13, 2));
        assert_eq!(s.fdim(1), pred.dim1);
        let series = s.rational_closed_form().unwrap();
        assert!(series.equivalent(&pred.series));
    }

    #[test]
    fn weakly_symmetric_strata() {
        let f = FieldSpec::Rational;
        // include both 1-dim blocks with mu = 1, exclude the M_2 block.
        let mut traceless = Matrix::zero(f, 2, 2);
        traceless.set(0, 0, qi(1));
        traceless.set(1, 1, qi(-1));
        let (s, pred) = weakly_symmetric_block_form(
            f,
            &[1, 1, 2],
            &[(0, qi(1)), (1, qi(1))],
            &[(2, traceless)],
        )
        .unwrap();
        assert_eq!(pred.dim1, qi(2));
        let c = s.classify().unwrap();
        assert!(c.weakly_symmetric && !c.symmetric);
        assert_eq!(c.fdim, qi(2));
        assert!(s.rational_closed_form().unwrap().equivalent(&pred.series));
        // all blocks included with mu = 1 is the symmetric special form
        let (s2, _) = weakly_symmetric_block_form(
            f,
            &[1, 2],
            &[(0, qi(1)), (1, qi(1))],
            &[],
        )
        .unwrap();
        let c2 = s2.classify().unwrap();
        assert!(c2.special && c2.symmetric);
    }
}
