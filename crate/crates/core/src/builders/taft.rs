//! The n^2-dimensional Taft algebra: the subalgebra of u_q(sl2) generated by
//! K and F, with basis K^i F^j and integral supported on F^{n-1}.

use std::sync::Arc;

use super::uqsl2::{normal_order_terms, Gen};
use super::words::WordContext;
use super::BuilderError;
use crate::algebra::Algebra;
use crate::exec;
use crate::frobenius::FrobeniusStructure;
use crate::scalar::{FieldSpec, Scalar, MAX_CYCLOTOMIC_ORDER};

fn taft_index(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

fn taft_label(i: usize, j: usize) -> String {
    let mut parts = Vec::new();
    let push = |parts: &mut Vec<String>, sym: &str, e: usize| match e {
        0 => {}
        1 => parts.push(sym.to_string()),
        _ => parts.push(format!("{sym}^{e}")),
    };
    push(&mut parts, "K", i);
    push(&mut parts, "F", j);
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("")
    }
}

/// Basis K^i F^j, 0 <= i, j < n, in lexicographic order.
pub fn taft_algebra(order: u32) -> Result<Arc<Algebra>, BuilderError> {
    if !(2..=MAX_CYCLOTOMIC_ORDER).contains(&order) {
        return Err(BuilderError::UnsupportedOrder(order));
    }
    let n = order as usize;
    let field = FieldSpec::cyclotomic(order)?;
    let dim = n * n;
    let labels: Vec<String> = (0..dim).map(|x| taft_label(x / n, x % n)).collect();
    let chunks = exec::map_indexed(dim * dim, |pair| {
        let (a, b) = (pair / dim, pair % dim);
        let (i1, j1) = (a / n, a % n);
        let (i2, j2) = (b / n, b % n);
        let mut word = Vec::with_capacity(i1 + j1 + i2 + j2);
        word.extend(std::iter::repeat(Gen::K).take(i1));
        word.extend(std::iter::repeat(Gen::F).take(j1));
        word.extend(std::iter::repeat(Gen::K).take(i2));
        word.extend(std::iter::repeat(Gen::F).take(j2));
        normal_order_terms(field, n, vec![(Scalar::one(field), word)])
            .into_iter()
            .map(|((i, j, k), c)| {
                debug_assert_eq!(k, 0);
                (a, b, taft_index(n, i, j), c)
            })
            .collect::<Vec<_>>()
    });
    let structure: Vec<(usize, usize, usize, Scalar)> = chunks.into_iter().flatten().collect();
    let mut unit = vec![Scalar::zero(field); dim];
    unit[0] = Scalar::one(field);
    Ok(Algebra::new_trusted(field, labels, &structure, unit)?)
}

/// The standard form: eps supported on F^{n-1} with value 1.
pub fn taft_standard_form(order: u32) -> Result<FrobeniusStructure, BuilderError> {
    let n = order as usize;
    let algebra = taft_algebra(order)?;
    let mut eps = vec![Scalar::zero(algebra.field()); algebra.dim()];
    eps[taft_index(n, 0, n - 1)] = Scalar::one(algebra.field());
    Ok(FrobeniusStructure::new(algebra, eps)?)
}

/// Word context exposing K and F for the expression grammar.
pub fn taft_word_context(algebra: &Arc<Algebra>) -> Result<WordContext, BuilderError> {
    let dim = algebra.dim();
    let n = (1..=dim)
        .find(|m| m * m == dim)
        .ok_or_else(|| BuilderError::Invariant("not a Taft algebra".into()))?;
    Ok(WordContext::new(
        Arc::clone(algebra),
        vec![
            ("K".to_string(), algebra.basis_element(taft_index(n, 1, 0))),
            ("F".to_string(), algebra.basis_element(taft_index(n, 0, 1))),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::multiply;
    use crate::scalar::root_of_unity;

    #[test]
    fn taft3_is_associative_and_q_commutes() {
        let alg = taft_algebra(3).unwrap();
        assert_eq!(alg.dim(), 9);
        alg.validate().unwrap();
        let field = alg.field();
        let k = alg.basis_element(taft_index(3, 1, 0));
        let f = alg.basis_element(taft_index(3, 0, 1));
        // FK = q^{-1} K F
        let fk = multiply(&f, &k).unwrap();
        let kf = multiply(&k, &f).unwrap();
        let q_inv = root_of_unity(field, -1).unwrap();
        assert_eq!(fk, kf.scale(&q_inv));
        // F^3 = 0, K^3 = 1
        assert!(f.pow(3).is_zero());
        assert_eq!(k.pow(3), alg.unit_element());
    }

    #[test]
    fn standard_form_has_invertible_gram() {
        let s = taft_standard_form(3).unwrap();
        assert_eq!(s.algebra().dim(), 9);
        // B = 0 already for the standard form
        assert!(s.lollipop().is_zero());
    }
}
