//! Exact evaluation of diagrams on a Frobenius structure.
//!
//! The running state is a sparse tensor whose first m legs are the diagram
//! inputs and whose remaining legs are the current interface wires; each
//! generator is contracted in index-wise, never materializing a slice matrix.

use crate::frobenius::FrobeniusStructure;
use crate::linalg::{apply_generator, GenMap, Tensor};
use crate::scalar::Scalar;

use super::{Diagram, DiagramError, Generator};

/// Evaluation limits. `max_width` bounds every interface width (inputs and
/// outputs included); the default of 4 suits algebras up to dimension ~10.
#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    pub max_width: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { max_width: 4 }
    }
}

/// Generator semantics of one Frobenius structure, tabulated once so many
/// diagrams can be evaluated against it.
///
/// The counit and cup are derived from the structure's eps as stored right
/// now, the cap and comultiplication from its cached metric. For any
/// structure built through the public constructor these cohere; a structure
/// with a substituted eps exposes the mismatch through failing identities.
pub struct Evaluator {
    dim: usize,
    field: crate::scalar::FieldSpec,
    mul: GenMap,
    comul: GenMap,
    unit: GenMap,
    counit: GenMap,
    cup: GenMap,
    cap: GenMap,
}

impl Evaluator {
    pub fn new(f: &FrobeniusStructure) -> Evaluator {
        let algebra = f.algebra();
        let n = algebra.dim();
        let field = algebra.field();
        let mut mul = GenMap::new(2, 1);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in algebra.product_coeffs(i, j) {
                    mul.push(vec![i as u32, j as u32], vec![*k as u32], c.clone());
                }
            }
        }
        let mut comul = GenMap::new(1, 2);
        for i in 0..n {
            let delta = f.coproduct(&algebra.basis_element(i));
            for (idx, v) in delta.iter() {
                comul.push(vec![i as u32], idx.clone(), v.clone());
            }
        }
        let mut unit = GenMap::new(0, 1);
        for (k, c) in algebra.unit_coeffs().iter().enumerate() {
            unit.push(vec![], vec![k as u32], c.clone());
        }
        let mut counit = GenMap::new(1, 0);
        for (i, c) in f.eps().iter().enumerate() {
            counit.push(vec![i as u32], vec![], c.clone());
        }
        // cup = eps o mul, from the current eps rather than the cached Gram
        let mut cup = GenMap::new(2, 0);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Scalar::zero(field);
                for (k, c) in algebra.product_coeffs(i, j) {
                    acc += &(c * &f.eps()[*k]);
                }
                cup.push(vec![i as u32, j as u32], vec![], acc);
            }
        }
        let mut cap = GenMap::new(0, 2);
        for k in 0..n {
            for l in 0..n {
                cap.push(
                    vec![],
                    vec![k as u32, l as u32],
                    f.metric().get(k, l).clone(),
                );
            }
        }
        Evaluator {
            dim: n,
            field,
            mul,
            comul,
            unit,
            counit,
            cup,
            cap,
        }
    }

    fn gen_map(&self, g: Generator) -> Option<&GenMap> {
        match g {
            Generator::Id => None,
            Generator::Mul => Some(&self.mul),
            Generator::Comul => Some(&self.comul),
            Generator::Unit => Some(&self.unit),
            Generator::Counit => Some(&self.counit),
            Generator::Cup => Some(&self.cup),
            Generator::Cap => Some(&self.cap),
        }
    }

    /// Evaluates a diagram to its (inputs + outputs)-leg tensor,
    /// input legs first.
    pub fn evaluate(&self, d: &Diagram, opts: &EvalOptions) -> Result<Tensor, DiagramError> {
        for width in d.widths() {
            if width > opts.max_width {
                return Err(DiagramError::WidthExceeded {
                    width,
                    max: opts.max_width,
                });
            }
        }
        let m = d.inputs();
        let mut state = Tensor::identity(self.field, self.dim, m);
        for slice in d.slices() {
            let mut pos = m;
            for g in slice {
                match self.gen_map(*g) {
                    None => pos += 1,
                    Some(map) => {
                        state = apply_generator(&state, pos, map)?;
                        pos += g.out_arity();
                    }
                }
            }
        }
        Ok(state)
    }
}

/// One-shot evaluation; build an [`Evaluator`] for batches.
pub fn evaluate(
    d: &Diagram,
    f: &FrobeniusStructure,
    opts: &EvalOptions,
) -> Result<Tensor, DiagramError> {
    Evaluator::new(f).evaluate(d, opts)
}

/// Parses and evaluates two diagram texts against one evaluator.
pub(crate) fn evaluate_pair(
    evaluator: &Evaluator,
    lhs: &str,
    rhs: &str,
    opts: &EvalOptions,
) -> Result<(Tensor, Tensor), DiagramError> {
    let dl = super::parse_diagram(lhs)?;
    let dr = super::parse_diagram(rhs)?;
    Ok((evaluator.evaluate(&dl, opts)?, evaluator.evaluate(&dr, opts)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{matrix_frobenius, s3, group_standard_form};
    use crate::diagrams::parse_diagram;
    use crate::linalg::Matrix;
    use crate::scalar::{FieldSpec, Scalar};

    fn qi(n: i64) -> Scalar {
        Scalar::from_int(FieldSpec::Rational, n)
    }

    #[test]
    fn lollipop_diagram_matches_op() {
        let g = s3();
        let form = group_standard_form(FieldSpec::Rational, &g).unwrap();
        let alg = form.algebra();
        let u = alg.basis_element(1);
        let tw = form.twist(&u).unwrap();
        let d = parse_diagram("cap; mul").unwrap();
        let t = evaluate(&d, &tw, &EvalOptions::default()).unwrap();
        // the 1-leg result is exactly the lollipop element
        for (i, c) in tw.lollipop().coeffs().iter().enumerate() {
            assert_eq!(&t.get(&[i as u32]), c);
        }
    }

    #[test]
    fn circle_value_is_fdim() {
        let fld = FieldSpec::Rational;
        let (f, _) = matrix_frobenius(2, &Matrix::identity(fld, 2)).unwrap();
        let d = parse_diagram("unit; comul; mul; counit").unwrap();
        let t = evaluate(&d, &f, &EvalOptions::default()).unwrap();
        assert_eq!(t.scalar_value(), qi(4));
        let circle = parse_diagram("cap; cup").unwrap();
        let t2 = evaluate(&circle, &f, &EvalOptions::default()).unwrap();
        assert_eq!(t2.scalar_value(), qi(4));
    }

    #[test]
    fn width_cap_enforced() {
        let fld = FieldSpec::Rational;
        let (f, _) = matrix_frobenius(2, &Matrix::identity(fld, 2)).unwrap();
        let d = parse_diagram("comul,comul; id,id,id,comul").unwrap();
        let r = evaluate(&d, &f, &EvalOptions { max_width: 4 });
        assert!(matches!(
            r,
            Err(DiagramError::WidthExceeded { width: 5, max: 4 })
        ));
    }

    #[test]
    fn mul_diagram_is_structure_constants() {
        let fld = FieldSpec::Rational;
        let (f, _) = matrix_frobenius(2, &Matrix::identity(fld, 2)).unwrap();
        let d = parse_diagram("mul").unwrap();
        let t = evaluate(&d, &f, &EvalOptions::default()).unwrap();
        // E11 * E12 = E12: entry at (0, 1, 1)
        assert_eq!(t.get(&[0, 1, 1]), qi(1));
        assert!(t.get(&[0, 1, 0]).is_zero());
    }
}
