//! Frobenius structures on an algebra: the linear form eps with invertible
//! Gram matrix, the metric g, the central lollipop element B = mu(g),
//! F-dimensions eps(B^j) and their exact rational Hilbert series, Nakayama
//! automorphisms, twisting, and the symmetry classifier.

mod series;

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::algebra::{
    commutator_subspace, element_inverse, left_mult_matrix, multiply, right_mult_matrix, Algebra,
    AlgebraError, Element,
};
use crate::linalg::{invert, minimal_polynomial, LinalgError, Matrix, Tensor};
use crate::scalar::Scalar;

pub use series::RationalSeries;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum FrobError {
    #[error("degenerate form: the Gram matrix is singular")]
    Degenerate,
    #[error("twisting element is not invertible")]
    NotInvertible,
    #[error("the two weak-symmetry tests disagree (commutator functional vs cocommutativity)")]
    WeakSymmetryDisagreement,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Gram matrix G_{ij} = eps(e_i e_j) of a linear form on an algebra.
pub fn gram_matrix(algebra: &Algebra, eps: &[Scalar]) -> Result<Matrix, FrobError> {
    let n = algebra.dim();
    if eps.len() != n {
        return Err(AlgebraError::WrongLength {
            got: eps.len(),
            need: n,
        }
        .into());
    }
    if eps.iter().any(|s| s.field() != algebra.field()) {
        return Err(AlgebraError::FieldMismatch.into());
    }
    let field = algebra.field();
    let mut g = Matrix::zero(field, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Scalar::zero(field);
            for (k, c) in algebra.product_coeffs(i, j) {
                acc += &(c * &eps[*k]);
            }
            g.set(i, j, acc);
        }
    }
    Ok(g)
}

/// Outcome of [`FrobeniusStructure::classify`].
///
/// `quasispecial` carries the scale factor lambda when B = lambda*1 with
/// lambda nonzero; B = 0 or non-scalar B report `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub symmetric: bool,
    pub weakly_symmetric: bool,
    pub special: bool,
    pub quasispecial: Option<Scalar>,
    /// eps(1), the counit scale factor.
    pub counit_scale: Scalar,
    /// dim_1 = eps(B).
    pub fdim: Scalar,
}

/// An algebra together with a linear form eps whose bilinear form
/// (a, b) = eps(ab) is invertible. The Gram matrix, its inverse (the metric
/// g), and B = mu(g) are computed eagerly; the Nakayama matrix lazily.
#[derive(Debug)]
pub struct FrobeniusStructure {
    algebra: Arc<Algebra>,
    eps: Vec<Scalar>,
    gram: Matrix,
    metric: Matrix,
    lollipop: Element,
    nakayama: OnceLock<Matrix>,
    nakayama_check: OnceLock<Result<(), FrobError>>,
}

impl FrobeniusStructure {
    pub fn new(algebra: Arc<Algebra>, eps: Vec<Scalar>) -> Result<Self, FrobError> {
        let gram = gram_matrix(&algebra, &eps)?;
        let metric = invert(&gram).map_err(|e| match e {
            LinalgError::Singular => FrobError::Degenerate,
            other => FrobError::Linalg(other),
        })?;
        let structure = FrobeniusStructure::from_parts(algebra, eps, gram, metric)?;
        structure.check_snakes()?;
        Ok(structure)
    }

    fn from_parts(
        algebra: Arc<Algebra>,
        eps: Vec<Scalar>,
        gram: Matrix,
        metric: Matrix,
    ) -> Result<Self, FrobError> {
        let lollipop = lollipop_of(&algebra, &metric)?;
        Ok(FrobeniusStructure {
            algebra,
            eps,
            gram,
            metric,
            lollipop,
            nakayama: OnceLock::new(),
            nakayama_check: OnceLock::new(),
        })
    }

    /// Replaces eps while keeping the cached Gram/metric/lollipop untouched.
    /// The result is deliberately allowed to be inconsistent; identity suites
    /// are expected to fail on it. Testing hook, not for normal use.
    pub fn with_eps_unchecked(&self, eps: Vec<Scalar>) -> FrobeniusStructure {
        FrobeniusStructure {
            algebra: Arc::clone(&self.algebra),
            eps,
            gram: self.gram.clone(),
            metric: self.metric.clone(),
            lollipop: self.lollipop.clone(),
            nakayama: OnceLock::new(),
            nakayama_check: OnceLock::new(),
        }
    }

    fn check_snakes(&self) -> Result<(), FrobError> {
        let n = self.algebra.dim();
        let field = self.algebra.field();
        let id = Matrix::identity(field, n);
        if self.gram.matmul(&self.metric) != id || self.metric.matmul(&self.gram) != id {
            return Err(FrobError::Invariant("snake identities fail".into()));
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn eps(&self) -> &[Scalar] {
        &self.eps
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Component matrix of the metric g (the inverse Gram matrix).
    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    /// The metric as a 2-leg tensor.
    pub fn metric_tensor(&self) -> Tensor {
        let n = self.algebra.dim();
        let mut t = Tensor::zero(self.algebra.field(), n, 2);
        for k in 0..n {
            for l in 0..n {
                t.insert_add(vec![k as u32, l as u32], self.metric.get(k, l).clone());
            }
        }
        t
    }

    /// eps evaluated on an element.
    pub fn eps_apply(&self, e: &Element) -> Scalar {
        let mut acc = Scalar::zero(self.algebra.field());
        for (i, c) in e.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc += &(c * &self.eps[i]);
            }
        }
        acc
    }

    /// The coproduct of b as a 2-leg tensor: Delta(b) = (b x 1) g, with the
    /// equality (b x 1) g = g (1 x b) checked on the way.
    pub fn coproduct(&self, b: &Element) -> Tensor {
        let n = self.algebra.dim();
        let field = self.algebra.field();
        let mut left = Tensor::zero(field, n, 2);
        let mut right = Tensor::zero(field, n, 2);
        for k in 0..n {
            let bek = multiply(b, &self.algebra.basis_element(k)).expect("same algebra");
            for l in 0..n {
                let gkl = self.metric.get(k, l);
                if gkl.is_zero() {
                    continue;
                }
                for (j, c) in bek.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        left.insert_add(vec![j as u32, l as u32], gkl * c);
                    }
                }
            }
        }
        for l in 0..n {
            let elb = multiply(&self.algebra.basis_element(l), b).expect("same algebra");
            for k in 0..n {
                let gkl = self.metric.get(k, l);
                if gkl.is_zero() {
                    continue;
                }
                for (m, c) in elb.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        right.insert_add(vec![k as u32, m as u32], gkl * c);
                    }
                }
            }
        }
        assert!(
            left == right,
            "coproduct sides disagree: (b x 1) g != g (1 x b)"
        );
        left
    }

    /// B = mu(g), the (central) lollipop element.
    pub fn lollipop(&self) -> &Element {
        &self.lollipop
    }

    /// The linear functional a -> eps(B a), as values on the basis.
    pub fn uloll(&self) -> Vec<Scalar> {
        let n = self.algebra.dim();
        (0..n)
            .map(|i| {
                let ba = multiply(&self.lollipop, &self.algebra.basis_element(i))
                    .expect("same algebra");
                self.eps_apply(&ba)
            })
            .collect()
    }

    /// dim_j = eps(B^j); dim_0 = eps(1). For j = 1 the value is cross-checked
    /// against the metric/Gram contraction and the Nakayama trace.
    pub fn fdim(&self, j: u32) -> Scalar {
        let value = self.eps_apply(&self.lollipop.pow(j));
        if j == 1 {
            let n = self.algebra.dim();
            let field = self.algebra.field();
            let mut contraction = Scalar::zero(field);
            for k in 0..n {
                for l in 0..n {
                    let m = self.metric.get(k, l);
                    if !m.is_zero() {
                        contraction += &(m * self.gram.get(k, l));
                    }
                }
            }
            assert!(
                contraction == value,
                "dim_1 disagrees with the metric/Gram contraction"
            );
            let tr = self.nakayama_matrix().trace();
            assert!(tr == value, "dim_1 disagrees with the Nakayama trace");
        }
        value
    }

    /// dim_0 .. dim_{terms-1}.
    pub fn hilbert_series(&self, terms: usize) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(terms);
        let mut power = self.algebra.unit_element();
        for j in 0..terms {
            if j > 0 {
                power = multiply(&power, &self.lollipop).expect("same algebra");
            }
            out.push(self.eps_apply(&power));
        }
        out
    }

    /// The Hilbert series as an exact rational function, via the minimal
    /// polynomial of B: if p(t) = t^k + c_{k-1} t^{k-1} + ... + c_0 kills B,
    /// then Q(x) = 1 + c_{k-1} x + ... + c_0 x^k and P = (Q * series) mod x^k.
    pub fn rational_closed_form(&self) -> Result<RationalSeries, FrobError> {
        let n = self.algebra.dim();
        let field = self.algebra.field();
        let mut powers: Vec<Vec<Scalar>> = vec![self.algebra.unit_element().coeffs().to_vec()];
        let mut current = self.algebra.unit_element();
        let minpoly = loop {
            match minimal_polynomial(&powers) {
                Ok(p) => break p,
                Err(LinalgError::NotFound) => {
                    if powers.len() > n + 1 {
                        return Err(FrobError::Invariant(
                            "power sequence of B did not close".into(),
                        ));
                    }
                    current = multiply(&current, &self.lollipop)?;
                    powers.push(current.coeffs().to_vec());
                }
                Err(e) => return Err(e.into()),
            }
        };
        let k = minpoly.len() - 1;
        // Q is the reversed minimal polynomial.
        let mut q = vec![Scalar::one(field)];
        for i in (0..k).rev() {
            q.push(minpoly[i].clone());
        }
        let dims = self.hilbert_series(k.max(1));
        let mut p = vec![Scalar::zero(field); k.max(1)];
        for (i, pi) in p.iter_mut().enumerate() {
            // coefficient i of Q * series, i < k
            let mut acc = Scalar::zero(field);
            for (l, ql) in q.iter().enumerate().take(i + 1) {
                acc += &(ql * &dims[i - l]);
            }
            *pi = acc;
        }
        let series = RationalSeries::new(field, p, q);
        // The expansion must reproduce every computed F-dimension.
        let check_terms = k.max(1);
        let expanded = series.expand(check_terms);
        for (j, value) in expanded.iter().enumerate() {
            if *value != dims[j] {
                return Err(FrobError::Invariant(format!(
                    "closed form fails to reproduce dim_{j}"
                )));
            }
        }
        Ok(series)
    }

    /// Nakayama matrix Z = (G^{-1})^T G, the unique linear map with
    /// (Z a, b) = (b, a). Cheap; no automorphism validation.
    pub fn nakayama_matrix(&self) -> &Matrix {
        self.nakayama
            .get_or_init(|| self.metric.transpose().matmul(&self.gram))
    }

    /// Nakayama matrix, validated once to be a unital algebra automorphism.
    pub fn nakayama(&self) -> Result<&Matrix, FrobError> {
        let check = self.nakayama_check.get_or_init(|| {
            let z = self.nakayama_matrix();
            let n = self.algebra.dim();
            let unit = self.algebra.unit_element();
            let z_unit = self.algebra.element(z.mul_vec(unit.coeffs()))?;
            if z_unit != unit {
                return Err(FrobError::Invariant("Nakayama does not fix 1".into()));
            }
            for i in 0..n {
                let zi = self.algebra.element(z.mul_vec(self.algebra.basis_element(i).coeffs()))?;
                for j in 0..n {
                    let zj = self
                        .algebra
                        .element(z.mul_vec(self.algebra.basis_element(j).coeffs()))?;
                    let prod = multiply(&self.algebra.basis_element(i), &self.algebra.basis_element(j))?;
                    let z_prod = self.algebra.element(z.mul_vec(prod.coeffs()))?;
                    if z_prod != multiply(&zi, &zj)? {
                        return Err(FrobError::Invariant(format!(
                            "Nakayama is not multiplicative at basis pair ({i}, {j})"
                        )));
                    }
                }
            }
            Ok(())
        });
        check.clone()?;
        Ok(self.nakayama_matrix())
    }

    pub fn nakayama_apply(&self, a: &Element) -> Element {
        let z = self.nakayama_matrix();
        self.algebra
            .element(z.mul_vec(a.coeffs()))
            .expect("same algebra")
    }

    /// Twist by an invertible element: eps_u(a) = eps(u a). Verifies the
    /// twisted metric g_u = sum g1 x u^{-1} g2 and the twisted Nakayama
    /// Ad_{u^{-1}} o Z against direct computation.
    pub fn twist(&self, u: &Element) -> Result<FrobeniusStructure, FrobError> {
        let u_inv = element_inverse(u).map_err(|e| match e {
            AlgebraError::NotInvertible => FrobError::NotInvertible,
            other => FrobError::Algebra(other),
        })?;
        let n = self.algebra.dim();
        let eps_u: Vec<Scalar> = (0..n)
            .map(|i| {
                let ua = multiply(u, &self.algebra.basis_element(i)).expect("same algebra");
                self.eps_apply(&ua)
            })
            .collect();
        let twisted = FrobeniusStructure::new(Arc::clone(&self.algebra), eps_u)?;
        // metric check: G_u^{-1} = G^{-1} L(u^{-1})^T
        let expected_metric = self.metric.matmul(&left_mult_matrix(&u_inv).transpose());
        if *twisted.metric() != expected_metric {
            return Err(FrobError::Invariant(
                "twisted metric differs from g1 x u^{-1} g2".into(),
            ));
        }
        // Nakayama check: Z_u = L(u^{-1}) R(u) Z
        let expected_nakayama = left_mult_matrix(&u_inv)
            .matmul(&right_mult_matrix(u))
            .matmul(self.nakayama_matrix());
        if *twisted.nakayama_matrix() != expected_nakayama {
            return Err(FrobError::Invariant(
                "twisted Nakayama differs from Ad_{u^{-1}} o Z".into(),
            ));
        }
        Ok(twisted)
    }

    /// Cocommutativity of B: left-multiplying g - g_21 by B gives zero.
    /// In matrices: L(B) (G^{-1} - (G^{-1})^T) = 0.
    pub fn cocommutativity_check(&self) -> bool {
        let asym = {
            let t = self.metric.transpose();
            let n = self.algebra.dim();
            let mut diff = Matrix::zero(self.algebra.field(), n, n);
            for r in 0..n {
                for c in 0..n {
                    diff.set(r, c, self.metric.get(r, c) - t.get(r, c));
                }
            }
            diff
        };
        let prod = left_mult_matrix(&self.lollipop).matmul(&asym);
        prod == Matrix::zero(self.algebra.field(), self.algebra.dim(), self.algebra.dim())
    }

    /// Full classification. Weak symmetry is computed two independent ways
    /// (the functional eps(B .) vanishing on commutators, and cocommutativity
    /// of B); disagreement is an error rather than a silent choice.
    pub fn classify(&self) -> Result<Classification, FrobError> {
        let field = self.algebra.field();
        let unit = self.algebra.unit_element();
        let symmetric = self.gram.is_symmetric();
        let special = self.lollipop == unit;
        let quasispecial = {
            let pivot = unit.coeffs().iter().position(|c| !c.is_zero()).expect("unit nonzero");
            let lambda = self.lollipop.coeff(pivot).div(unit.coeff(pivot)).ok();
            match lambda {
                Some(l) if !l.is_zero() && self.lollipop == unit.scale(&l) => Some(l),
                _ => None,
            }
        };
        let uloll = self.uloll();
        let commutators = commutator_subspace(&self.algebra);
        let vanishes = commutators.iter().all(|c| {
            let mut acc = Scalar::zero(field);
            for (i, v) in c.coeffs().iter().enumerate() {
                if !v.is_zero() {
                    acc += &(v * &uloll[i]);
                }
            }
            acc.is_zero()
        });
        let cocomm = self.cocommutativity_check();
        if vanishes != cocomm {
            return Err(FrobError::WeakSymmetryDisagreement);
        }
        let weakly_symmetric = vanishes;
        if special && quasispecial != Some(Scalar::one(field)) {
            return Err(FrobError::Invariant("special but lambda != 1".into()));
        }
        if symmetric && !weakly_symmetric {
            return Err(FrobError::Invariant(
                "symmetric but not weakly symmetric".into(),
            ));
        }
        if quasispecial.is_some() && weakly_symmetric && !symmetric {
            return Err(FrobError::Invariant(
                "quasispecial asymmetric structure reported weakly symmetric".into(),
            ));
        }
        Ok(Classification {
            symmetric,
            weakly_symmetric,
            special,
            quasispecial,
            counit_scale: self.eps_apply(&unit),
            fdim: self.fdim(1),
        })
    }
}

/// B = sum_{kl} (G^{-1})_{kl} e_k e_l, with centrality checked.
fn lollipop_of(algebra: &Arc<Algebra>, metric: &Matrix) -> Result<Element, FrobError> {
    let n = algebra.dim();
    let mut b = algebra.zero_element();
    for k in 0..n {
        for l in 0..n {
            let m = metric.get(k, l);
            if m.is_zero() {
                continue;
            }
            let prod = multiply(&algebra.basis_element(k), &algebra.basis_element(l))?;
            b = &b + &prod.scale(m);
        }
    }
    for i in 0..n {
        let ei = algebra.basis_element(i);
        if multiply(&b, &ei)? != multiply(&ei, &b)? {
            return Err(FrobError::Invariant(format!(
                "lollipop is not central: fails against basis element {i}"
            )));
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::scalar::FieldSpec;

    fn qi(n: i64) -> Scalar {
        Scalar::from_int(FieldSpec::Rational, n)
    }

    fn qq(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(FieldSpec::Rational, n, d)
    }

    fn m2() -> Arc<Algebra> {
        let d = 2usize;
        let idx = |i: usize, j: usize| i * d + j;
        let mut structure = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for l in 0..d {
                    structure.push((idx(i, j), idx(j, l), idx(i, l), qi(1)));
                }
            }
        }
        let mut unit = vec![qi(0); 4];
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

    /// eps = Tr(u .) on M_2 with u = diag(a, b): values on (E11,E12,E21,E22).
    fn m2_trace_form(a: i64, b: i64) -> Vec<Scalar> {
        vec![qi(a), qi(0), qi(0), qi(b)]
    }

    #[test]
    fn trace_form_metric_is_unit_permutation() {
        // With eps = Tr the Gram of the matrix-unit basis is a permutation and
        // g = sum E_ij x E_ji.
        let alg = m2();
        let f = FrobeniusStructure::new(Arc::clone(&alg), m2_trace_form(1, 1)).unwrap();
        let g = f.metric_tensor();
        assert_eq!(g.get(&[0, 0]), qi(1)); // E11 x E11
        assert_eq!(g.get(&[1, 2]), qi(1)); // E12 x E21
        assert_eq!(g.get(&[2, 1]), qi(1));
        assert_eq!(g.get(&[3, 3]), qi(1));
        assert_eq!(g.nnz(), 4);
        // special after scaling: here B = Tr(1) * 1 = 2 * 1
        assert_eq!(f.lollipop(), &alg.unit_element().scale(&qi(2)));
        assert_eq!(f.fdim(1), qi(4));
    }

    #[test]
    fn degenerate_form_rejected() {
        let alg = m2();
        let zero = vec![qi(0); 4];
        assert!(matches!(
            FrobeniusStructure::new(alg, zero),
            Err(FrobError::Degenerate)
        ));
    }

    #[test]
    fn coproduct_counit_law() {
        let alg = m2();
        let f = FrobeniusStructure::new(Arc::clone(&alg), m2_trace_form(1, 2)).unwrap();
        // (eps x id) Delta(b) = b on every basis element
        for i in 0..4 {
            let b = alg.basis_element(i);
            let delta = f.coproduct(&b);
            let mut recovered = vec![qi(0); 4];
            for (idx, v) in delta.iter() {
                let j = idx[0] as usize;
                let l = idx[1] as usize;
                recovered[l] = &recovered[l] + &(&f.eps()[j] * v);
            }
            assert_eq!(recovered, b.coeffs());
        }
        // Delta(1) = g
        assert_eq!(f.coproduct(&alg.unit_element()), f.metric_tensor());
    }

    #[test]
    fn twisted_trace_form_classification() {
        let alg = m2();
        // u = diag(1, 2): quasispecial with lambda = Tr(u^{-1}) = 3/2, not
        // symmetric, not weakly symmetric.
        let f = FrobeniusStructure::new(Arc::clone(&alg), m2_trace_form(1, 2)).unwrap();
        let c = f.classify().unwrap();
        assert!(!c.symmetric);
        assert!(!c.weakly_symmetric);
        assert!(!c.special);
        assert_eq!(c.quasispecial, Some(qq(3, 2)));
        assert_eq!(c.counit_scale, qi(3));
        assert_eq!(c.fdim, qq(9, 2));
        assert!(!f.cocommutativity_check());

        // u = diag(1, -1): B = 0, asymmetric weakly symmetric, fdim 0.
        let g = FrobeniusStructure::new(Arc::clone(&alg), m2_trace_form(1, -1)).unwrap();
        let c = g.classify().unwrap();
        assert!(!c.symmetric);
        assert!(c.weakly_symmetric);
        assert_eq!(c.quasispecial, None);
        assert!(g.lollipop().is_zero());
        assert_eq!(c.fdim, qi(0));
        assert!(g.cocommutativity_check());

        // u = 1: symmetric quasispecial.
        let h = FrobeniusStructure::new(Arc::clone(&alg), m2_trace_form(1, 1)).unwrap();
        let c = h.classify().unwrap();
        assert!(c.symmetric && c.weakly_symmetric);
        assert_eq!(c.quasispecial, Some(qi(2)));
    }

    #[test]
    fn nakayama_of_twist_is_conjugation() {
        let alg = m2();
        let base = FrobeniusStructure::new(Arc::clone(&alg), m2_trace_form(1, 1)).unwrap();
        assert_eq!(
            *base.nakayama().unwrap(),
            Matrix::identity(FieldSpec::Rational, 4)
        );
        let u = alg.element(vec![qi(1), qi(0), qi(0), qi(2)]).unwrap();
        let tw = base.twist(&u).unwrap();
        // zeta_u(E12) = u^{-1} E12 u = 2 E12
        let e12 = alg.basis_element(1);
        assert_eq!(tw.nakayama_apply(&e12), e12.scale(&qi(2)));
        assert_eq!(tw.nakayama().unwrap().trace(), qq(9, 2));
        // twist by 1 is the identity on structures
        let same = base.twist(&alg.unit_element()).unwrap();
        assert_eq!(same.eps(), base.eps());
    }

    #[test]
    fn closed_form_of_quasispecial() {
        let alg = m2();
        let f = FrobeniusStructure::new(Arc::clone(&alg), m2_trace_form(1, 2)).unwrap();
        // B = (3/2) 1, eps(1) = 3: series 3/(1 - (3/2) x)
        let series = f.rational_closed_form().unwrap();
        let expected = RationalSeries::new(
            FieldSpec::Rational,
            vec![qi(3)],
            vec![qi(1), qq(-3, 2)],
        );
        assert!(series.equivalent(&expected));
        let dims = f.hilbert_series(5);
        assert_eq!(series.expand(5), dims);
    }

    #[test]
    fn rescaling_keeps_fdim() {
        // dim_1 of a quasispecial structure is invariant under rescaling eps.
        let alg = m2();
        let f = FrobeniusStructure::new(Arc::clone(&alg), m2_trace_form(1, 2)).unwrap();
        let scaled: Vec<Scalar> = f.eps().iter().map(|c| c * &qq(7, 3)).collect();
        let g = FrobeniusStructure::new(Arc::clone(&alg), scaled).unwrap();
        assert_eq!(f.fdim(1), g.fdim(1));
    }
}
