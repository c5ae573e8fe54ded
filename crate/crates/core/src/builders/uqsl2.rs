//! u_q(sl2) at a primitive n-th root of unity, over Q(zeta_n).
//!
//! Generators K, E, F with K^n = 1, E^n = F^n = 0, EK = qKE, FK = q^{-1}KF
//! and [E, F] = (K - K^{-1})/(q - q^{-1}); at n = 2 the commutator term
//! vanishes (K = K^{-1}) so [E, F] = 0. Basis: PBW monomials K^i F^j E^k in
//! lexicographic (i, j, k) order. Multiplication is computed by rewriting
//! words to normal order one relation at a time; each rewrite strictly
//! reduces (number of EF inversions, then K displacement), so it terminates.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::words::WordContext;
use super::BuilderError;
use crate::algebra::{multiply, Algebra, Element};
use crate::exec;
use crate::frobenius::FrobeniusStructure;
use crate::linalg::Matrix;
use crate::scalar::{root_of_unity, FieldSpec, Scalar, MAX_CYCLOTOMIC_ORDER};

/// Public word alphabet; K^{-1} is folded to K^{n-1} on input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    K,
    KInv,
    E,
    F,
}

/// Internal alphabet with the normal order K < F < E.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Gen {
    K,
    F,
    E,
}

fn rank(g: Gen) -> u8 {
    match g {
        Gen::K => 0,
        Gen::F => 1,
        Gen::E => 2,
    }
}

/// Normal-orders a sum of coefficient-weighted words, returning exponent
/// triples (i, j, k) -> coefficient with i < n, j < n, k < n.
pub(crate) fn normal_order_terms(
    field: FieldSpec,
    n: usize,
    start: Vec<(Scalar, Vec<Gen>)>,
) -> BTreeMap<(usize, usize, usize), Scalar> {
    let q = root_of_unity(field, 1).expect("cyclotomic field");
    let q_inv = root_of_unity(field, -1).expect("cyclotomic field");
    // 1/(q - q^{-1}); only needed for n > 2.
    let comm_scale = if n > 2 {
        Some((&q - &q_inv).inv().expect("q != q^{-1} for n > 2"))
    } else {
        None
    };
    let mut acc: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
    let mut work = start;
    while let Some((coeff, word)) = work.pop() {
        if coeff.is_zero() {
            continue;
        }
        let violation = (0..word.len().saturating_sub(1))
            .find(|&i| rank(word[i]) > rank(word[i + 1]));
        let Some(i) = violation else {
            // sorted: count exponents and reduce K^n = 1, E^n = F^n = 0
            let kc = word.iter().filter(|&&g| g == Gen::K).count();
            let fc = word.iter().filter(|&&g| g == Gen::F).count();
            let ec = word.iter().filter(|&&g| g == Gen::E).count();
            if fc >= n || ec >= n {
                continue;
            }
            let key = (kc % n, fc, ec);
            let entry = acc.entry(key).or_insert_with(|| Scalar::zero(field));
            *entry = &*entry + &coeff;
            if entry.is_zero() {
                acc.remove(&key);
            }
            continue;
        };
        match (word[i], word[i + 1]) {
            (Gen::E, Gen::K) => {
                // EK = qKE
                let mut w = word;
                w.swap(i, i + 1);
                work.push((&coeff * &q, w));
            }
            (Gen::F, Gen::K) => {
                // FK = q^{-1}KF
                let mut w = word;
                w.swap(i, i + 1);
                work.push((&coeff * &q_inv, w));
            }
            (Gen::E, Gen::F) => {
                // EF = FE + (K - K^{-1})/(q - q^{-1}); the second part is
                // zero at n = 2.
                let mut swapped = word.clone();
                swapped.swap(i, i + 1);
                work.push((coeff.clone(), swapped));
                if let Some(scale) = &comm_scale {
                    let mut with_k: Vec<Gen> = Vec::with_capacity(word.len() - 1);
                    with_k.extend_from_slice(&word[..i]);
                    with_k.push(Gen::K);
                    with_k.extend_from_slice(&word[i + 2..]);
                    work.push((&coeff * scale, with_k));
                    let mut with_k_inv: Vec<Gen> = Vec::with_capacity(word.len() + n - 3);
                    with_k_inv.extend_from_slice(&word[..i]);
                    with_k_inv.extend(std::iter::repeat(Gen::K).take(n - 1));
                    with_k_inv.extend_from_slice(&word[i + 2..]);
                    work.push((&coeff.neg() * scale, with_k_inv));
                }
            }
            _ => unreachable!("only EK, FK, EF can violate the order"),
        }
    }
    acc
}

pub fn pbw_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    (i * n + j) * n + k
}

pub fn pbw_exponents(n: usize, index: usize) -> (usize, usize, usize) {
    (index / (n * n), (index / n) % n, index % n)
}

fn monomial_label(i: usize, j: usize, k: usize) -> String {
    let mut parts = Vec::new();
    let push = |parts: &mut Vec<String>, sym: &str, e: usize| match e {
        0 => {}
        1 => parts.push(sym.to_string()),
        _ => parts.push(format!("{sym}^{e}")),
    };
    push(&mut parts, "K", i);
    push(&mut parts, "F", j);
    push(&mut parts, "E", k);
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("")
    }
}

fn monomial_word(i: usize, j: usize, k: usize) -> Vec<Gen> {
    let mut w = Vec::with_capacity(i + j + k);
    w.extend(std::iter::repeat(Gen::K).take(i));
    w.extend(std::iter::repeat(Gen::F).take(j));
    w.extend(std::iter::repeat(Gen::E).take(k));
    w
}

fn check_order(n: u32) -> Result<(usize, FieldSpec), BuilderError> {
    if !(2..=MAX_CYCLOTOMIC_ORDER).contains(&n) {
        return Err(BuilderError::UnsupportedOrder(n));
    }
    Ok((n as usize, FieldSpec::cyclotomic(n)?))
}

/// The n^3-dimensional algebra u_q(sl2), q a primitive n-th root of unity.
/// Construction is trusted; `Algebra::validate` is the associativity oracle
/// exercised by the test suites.
pub fn uqsl2(order: u32) -> Result<Arc<Algebra>, BuilderError> {
    let (n, field) = check_order(order)?;
    let dim = n * n * n;
    let labels: Vec<String> = (0..dim)
        .map(|idx| {
            let (i, j, k) = pbw_exponents(n, idx);
            monomial_label(i, j, k)
        })
        .collect();
    let chunks = exec::map_indexed(dim * dim, |pair| {
        let (a, b) = (pair / dim, pair % dim);
        let (i1, j1, k1) = pbw_exponents(n, a);
        let (i2, j2, k2) = pbw_exponents(n, b);
        let mut word = monomial_word(i1, j1, k1);
        word.extend(monomial_word(i2, j2, k2));
        let products = normal_order_terms(field, n, vec![(Scalar::one(field), word)]);
        products
            .into_iter()
            .map(|((i, j, k), c)| (a, b, pbw_index(n, i, j, k), c))
            .collect::<Vec<_>>()
    });
    let structure: Vec<(usize, usize, usize, Scalar)> = chunks.into_iter().flatten().collect();
    let mut unit = vec![Scalar::zero(field); dim];
    unit[0] = Scalar::one(field);
    Ok(Algebra::new_trusted(field, labels, &structure, unit)?)
}

/// Normal-orders a scalar-weighted word over K, K^{-1}, E, F into an element
/// of u_q(sl2).
pub fn normal_order(
    algebra: &Arc<Algebra>,
    coeff: &Scalar,
    word: &[Letter],
) -> Result<Element, BuilderError> {
    let dim = algebra.dim();
    let n = (1..=dim).find(|m| m * m * m == dim).ok_or_else(|| {
        BuilderError::Invariant("normal_order needs a PBW algebra of dimension n^3".into())
    })?;
    let gens: Vec<Gen> = word
        .iter()
        .flat_map(|l| match l {
            Letter::K => vec![Gen::K],
            Letter::KInv => vec![Gen::K; n - 1],
            Letter::E => vec![Gen::E],
            Letter::F => vec![Gen::F],
        })
        .collect();
    let terms = normal_order_terms(algebra.field(), n, vec![(coeff.clone(), gens)]);
    let mut coeffs = vec![Scalar::zero(algebra.field()); dim];
    for ((i, j, k), c) in terms {
        coeffs[pbw_index(n, i, j, k)] = c;
    }
    Ok(algebra.element(coeffs)?)
}

/// The integral form: eps supported on K F^{n-1} E^{n-1} with value 1.
/// The resulting structure has B = 0, vanishing eps(B .), and dim_1 = 0;
/// these are asserted.
pub fn uqsl2_integral_form(order: u32) -> Result<FrobeniusStructure, BuilderError> {
    let (n, field) = check_order(order)?;
    let algebra = uqsl2(order)?;
    let mut eps = vec![Scalar::zero(field); algebra.dim()];
    eps[pbw_index(n, 1, n - 1, n - 1)] = Scalar::one(field);
    let structure = FrobeniusStructure::new(algebra, eps)?;
    if !structure.lollipop().is_zero() {
        return Err(BuilderError::Invariant("integral form must have B = 0".into()));
    }
    if structure.uloll().iter().any(|v| !v.is_zero()) {
        return Err(BuilderError::Invariant(
            "integral form must have vanishing eps(B .)".into(),
        ));
    }
    if !structure.fdim(1).is_zero() {
        return Err(BuilderError::Invariant("integral form must have dim_1 = 0".into()));
    }
    Ok(structure)
}

/// The counit of the K-twist of the integral form, computed generically as
/// a -> integral(K a). Returned with the algebra so callers can inspect the
/// Gram matrix without inverting it.
pub fn uqsl2_ktwist_eps(order: u32) -> Result<(Arc<Algebra>, Vec<Scalar>), BuilderError> {
    let (n, _) = check_order(order)?;
    let algebra = uqsl2(order)?;
    let integral_at = pbw_index(n, 1, n - 1, n - 1);
    let k = algebra.basis_element(pbw_index(n, 1, 0, 0));
    let eps = (0..algebra.dim())
        .map(|i| {
            let ka = multiply(&k, &algebra.basis_element(i)).expect("same algebra");
            ka.coeff(integral_at).clone()
        })
        .collect();
    Ok((algebra, eps))
}

/// Twist of the integral form by K: a symmetric Frobenius form.
pub fn uqsl2_symmetric_form(order: u32) -> Result<FrobeniusStructure, BuilderError> {
    let (n, _) = check_order(order)?;
    let integral = uqsl2_integral_form(order)?;
    let k = integral.algebra().basis_element(pbw_index(n, 1, 0, 0));
    Ok(integral.twist(&k)?)
}

/// Expected dimension data of a Cartan twist at n = 3.
#[derive(Debug, Clone)]
pub struct CartanPrediction {
    pub u1: Scalar,
    pub dim1: Scalar,
    /// dim_j = u1 * ratio^j for j >= 2.
    pub ratio: Scalar,
}

impl CartanPrediction {
    pub fn dim(&self, j: u32) -> Scalar {
        match j {
            0 => Scalar::zero(self.dim1.field()),
            1 => self.dim1.clone(),
            _ => &self.u1 * &self.ratio.pow(j),
        }
    }
}

/// u_0 + u_1 K + ... + u_{n-1} K^{n-1} in the Cartan subalgebra.
pub fn cartan_element(
    algebra: &Arc<Algebra>,
    coeffs: &[Scalar],
) -> Result<Element, BuilderError> {
    let dim = algebra.dim();
    let n = (1..=dim)
        .find(|m| m * m * m == dim)
        .ok_or_else(|| BuilderError::Invariant("not a PBW algebra".into()))?;
    if coeffs.len() != n {
        return Err(BuilderError::BadBlockSpec(format!(
            "cartan element needs {n} coefficients"
        )));
    }
    let mut v = vec![Scalar::zero(algebra.field()); dim];
    for (i, c) in coeffs.iter().enumerate() {
        v[pbw_index(n, i, 0, 0)] = c.clone();
    }
    Ok(algebra.element(v)?)
}

/// The circulant matrix of (u_0, ..., u_{n-1}): entry (r, c) = u_{(r-c) mod n}.
/// Its determinant being nonzero is equivalent to invertibility of the
/// corresponding Cartan element.
pub fn circulant_matrix(field: FieldSpec, coeffs: &[Scalar]) -> Matrix {
    let n = coeffs.len();
    Matrix::from_fn(field, n, n, |r, c| coeffs[(r + n - c) % n].clone()).expect("uniform field")
}

/// Twist of the n = 3 integral form by u = u0 + u1 K + u2 K^2. Fails with
/// `NotInvertible` when delta = u0^3 + u1^3 + u2^3 - 3 u0 u1 u2 = 0. The
/// returned structure is checked against the predicted counit values and
/// F-dimensions.
pub fn uqsl2_cartan_twist(
    u0: &Scalar,
    u1: &Scalar,
    u2: &Scalar,
) -> Result<(FrobeniusStructure, CartanPrediction), BuilderError> {
    let field = FieldSpec::cyclotomic(3)?;
    for u in [u0, u1, u2] {
        if u.field() != field {
            return Err(BuilderError::Scalar(crate::scalar::ScalarError::FieldMismatch));
        }
    }
    let cube = |s: &Scalar| s.pow(3);
    let three = Scalar::from_int(field, 3);
    let delta = &(&(&cube(u0) + &cube(u1)) + &cube(u2)) - &(&(&three * u0) * &(u1 * u2));
    if delta.is_zero() {
        return Err(BuilderError::NotInvertible);
    }
    let integral = uqsl2_integral_form(3)?;
    let algebra = Arc::clone(integral.algebra());
    let u = cartan_element(&algebra, &[u0.clone(), u1.clone(), u2.clone()])?;
    let twisted = integral.twist(&u)?;
    // counit values: u1 on F^2E^2, u0 on KF^2E^2, u2 on K^2F^2E^2
    let n = 3;
    let expectations = [
        (pbw_index(n, 0, 2, 2), u1),
        (pbw_index(n, 1, 2, 2), u0),
        (pbw_index(n, 2, 2, 2), u2),
    ];
    for (idx, expected) in expectations {
        if twisted.eps()[idx] != *expected {
            return Err(BuilderError::Invariant(format!(
                "cartan twist counit value at basis {idx} differs from prediction"
            )));
        }
    }
    let u1sq_minus_u0u2 = &(u1 * u1) - &(u0 * u2);
    let delta_inv = delta.inv().expect("delta nonzero");
    let dim1 = &(&Scalar::from_int(field, 27) * u1) * &(&u1sq_minus_u0u2 * &delta_inv);
    let ratio = &Scalar::from_int(field, 9) * &(&u1sq_minus_u0u2 * &delta_inv);
    let prediction = CartanPrediction {
        u1: u1.clone(),
        dim1,
        ratio,
    };
    if !twisted.fdim(0).is_zero() {
        return Err(BuilderError::Invariant("cartan twist must have dim_0 = 0".into()));
    }
    for j in 1..=3u32 {
        if twisted.fdim(j) != prediction.dim(j) {
            return Err(BuilderError::Invariant(format!(
                "cartan twist dim_{j} differs from prediction"
            )));
        }
    }
    Ok((twisted, prediction))
}

/// The quadratic Casimir of u_q(sl2) at n = 3: c_q = K + qK^{-1} - 3q^2 FE.
pub fn casimir_n3(algebra: &Arc<Algebra>) -> Result<Element, BuilderError> {
    let field = algebra.field();
    let n = 3;
    if algebra.dim() != 27 {
        return Err(BuilderError::Invariant("casimir_n3 needs u_q(sl2) at n = 3".into()));
    }
    let q = root_of_unity(field, 1)?;
    let q2 = root_of_unity(field, 2)?;
    let mut v = vec![Scalar::zero(field); 27];
    v[pbw_index(n, 1, 0, 0)] = Scalar::one(field);
    v[pbw_index(n, 2, 0, 0)] = q;
    v[pbw_index(n, 0, 1, 1)] = &Scalar::from_int(field, -3) * &q2;
    Ok(algebra.element(v)?)
}

/// Projection onto the monomials with equal E- and F-powers (the degree-0
/// part of the Z/n grading by conjugation with K).
pub fn degree_zero_part(x: &Element) -> Result<Element, BuilderError> {
    let dim = x.algebra().dim();
    let n = (1..=dim)
        .find(|m| m * m * m == dim)
        .ok_or_else(|| BuilderError::Invariant("not a PBW algebra".into()))?;
    let mut v = vec![Scalar::zero(x.algebra().field()); dim];
    for (idx, c) in x.coeffs().iter().enumerate() {
        let (_, j, k) = pbw_exponents(n, idx);
        if j == k {
            v[idx] = c.clone();
        }
    }
    Ok(x.algebra().element(v)?)
}

/// Word context exposing K, E, F for the expression grammar.
pub fn uqsl2_word_context(algebra: &Arc<Algebra>) -> Result<WordContext, BuilderError> {
    let dim = algebra.dim();
    let n = (1..=dim)
        .find(|m| m * m * m == dim)
        .ok_or_else(|| BuilderError::Invariant("not a PBW algebra".into()))?;
    Ok(WordContext::new(
        Arc::clone(algebra),
        vec![
            ("K".to_string(), algebra.basis_element(pbw_index(n, 1, 0, 0))),
            ("F".to_string(), algebra.basis_element(pbw_index(n, 0, 1, 0))),
            ("E".to_string(), algebra.basis_element(pbw_index(n, 0, 0, 1))),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::element_inverse;
    use crate::linalg::determinant;

    #[test]
    fn n2_relations() {
        let alg = uqsl2(2).unwrap();
        assert_eq!(alg.dim(), 8);
        alg.validate().unwrap();
        let f = alg.field();
        let k = alg.basis_element(pbw_index(2, 1, 0, 0));
        let e = alg.basis_element(pbw_index(2, 0, 0, 1));
        let fe = alg.basis_element(pbw_index(2, 0, 1, 0));
        // K^2 = 1, E^2 = 0, [E, F] = 0, {E, K} = 0
        assert_eq!(multiply(&k, &k).unwrap(), alg.unit_element());
        assert!(multiply(&e, &e).unwrap().is_zero());
        let ef = multiply(&e, &fe).unwrap();
        let fe_prod = multiply(&fe, &e).unwrap();
        assert_eq!(ef, fe_prod);
        let ek = multiply(&e, &k).unwrap();
        let ke = multiply(&k, &e).unwrap();
        assert!((&ek + &ke).is_zero());
        let _ = f;
    }

    #[test]
    fn n3_single_rewrite() {
        // EF = FE + (K - K^2)/(q - q^2) at n = 3.
        let alg = uqsl2(3).unwrap();
        let field = alg.field();
        let e = alg.basis_element(pbw_index(3, 0, 0, 1));
        let f = alg.basis_element(pbw_index(3, 0, 1, 0));
        let ef = multiply(&e, &f).unwrap();
        let q = root_of_unity(field, 1).unwrap();
        let q2 = root_of_unity(field, 2).unwrap();
        let scale = (&q - &q2).inv().unwrap();
        let mut expected = vec![Scalar::zero(field); 27];
        expected[pbw_index(3, 0, 1, 1)] = Scalar::one(field);
        expected[pbw_index(3, 1, 0, 0)] = scale.clone();
        expected[pbw_index(3, 2, 0, 0)] = scale.neg();
        assert_eq!(ef.coeffs(), &expected[..]);
    }

    #[test]
    fn normal_order_word_api() {
        let alg = uqsl2(3).unwrap();
        let field = alg.field();
        // K^{-1} = K^2
        let kinv = normal_order(&alg, &Scalar::one(field), &[Letter::KInv]).unwrap();
        assert_eq!(kinv, alg.basis_element(pbw_index(3, 2, 0, 0)));
        let k = alg.basis_element(pbw_index(3, 1, 0, 0));
        assert_eq!(multiply(&k, &kinv).unwrap(), alg.unit_element());
    }

    #[test]
    fn casimir_satisfies_its_cubic() {
        let alg = uqsl2(3).unwrap();
        let field = alg.field();
        let c = casimir_n3(&alg).unwrap();
        let c3 = c.pow(3);
        let q = root_of_unity(field, 1).unwrap();
        let rhs = &alg.unit_element().scale(&Scalar::from_int(field, 2))
            + &c.scale(&(&Scalar::from_int(field, 3) * &q));
        assert_eq!(c3, rhs);
    }

    #[test]
    fn integral_form_and_ktwist() {
        let integral = uqsl2_integral_form(2).unwrap();
        assert!(integral.lollipop().is_zero());
        let sym = uqsl2_symmetric_form(2).unwrap();
        assert!(sym.gram().is_symmetric());
        // the displayed metric at n = 2: g = F x KE - KE x F + E x KF
        //   - KF x E + KEF x 1 + 1 x KEF + K x EF + EF x K
        let n = 2;
        let g = sym.algebra();
        let idx = |i, j, k| pbw_index(n, i, j, k) as u32;
        let t = FrobeniusStructure::metric_tensor(&uqsl2_integral_form(2).unwrap());
        let one = Scalar::one(g.field());
        let m_one = Scalar::from_int(g.field(), -1);
        // entries of the untwisted integral-form metric
        assert_eq!(t.get(&[idx(0, 1, 0), idx(1, 0, 1)]), one); // F x KE
        assert_eq!(t.get(&[idx(1, 0, 1), idx(0, 1, 0)]), m_one); // -KE x F
        assert_eq!(t.get(&[idx(0, 0, 1), idx(1, 1, 0)]), one); // E x KF
        assert_eq!(t.get(&[idx(1, 1, 0), idx(0, 0, 1)]), m_one); // -KF x E
        assert_eq!(t.get(&[idx(1, 1, 1), idx(0, 0, 0)]), one); // KEF x 1
        assert_eq!(t.get(&[idx(0, 0, 0), idx(1, 1, 1)]), one); // 1 x KEF
        assert_eq!(t.get(&[idx(1, 0, 0), idx(0, 1, 1)]), one); // K x EF
        assert_eq!(t.get(&[idx(0, 1, 1), idx(1, 0, 0)]), one); // EF x K
        assert_eq!(t.nnz(), 8);
    }

    #[test]
    fn cartan_twist_at_k() {
        let field = FieldSpec::cyclotomic(3).unwrap();
        let zero = Scalar::zero(field);
        let one = Scalar::one(field);
        let (s, pred) = uqsl2_cartan_twist(&zero, &one, &zero).unwrap();
        assert_eq!(pred.dim1, Scalar::from_int(field, 27));
        assert_eq!(s.fdim(2), Scalar::from_int(field, 81));
        assert_eq!(s.fdim(3), Scalar::from_int(field, 729));
        assert!(s.gram().is_symmetric());
        // degenerate direction rejected
        assert!(matches!(
            uqsl2_cartan_twist(&one, &one, &one),
            Err(BuilderError::NotInvertible)
        ));
    }

    #[test]
    fn circulant_criterion_matches_solver() {
        let alg = uqsl2(3).unwrap();
        let field = alg.field();
        let samples: [[i64; 3]; 4] = [[1, 1, 1], [2, 1, 0], [1, 0, 0], [3, -1, 2]];
        for sample in samples {
            let coeffs: Vec<Scalar> =
                sample.iter().map(|&c| Scalar::from_int(field, c)).collect();
            let u = cartan_element(&alg, &coeffs).unwrap();
            let det = determinant(&circulant_matrix(field, &coeffs));
            assert_eq!(element_inverse(&u).is_ok(), !det.is_zero());
        }
    }

    #[test]
    fn degree_zero_projection() {
        let alg = uqsl2(3).unwrap();
        let field = alg.field();
        let k = alg.basis_element(pbw_index(3, 1, 0, 0));
        let f = alg.basis_element(pbw_index(3, 0, 1, 0));
        let x = &k + &f;
        assert_eq!(degree_zero_part(&x).unwrap(), k);
        let _ = field;
    }
}
