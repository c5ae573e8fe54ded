//! The identity suite: every defining and derived identity of a Frobenius
//! structure, grouped by the (inputs, outputs) arity of both sides, checked
//! as exact tensor equalities.

use crate::frobenius::FrobeniusStructure;
use crate::scalar::Scalar;

use super::{evaluate_pair, EvalOptions};
use super::{parse_diagram, DiagramError, Evaluator};

#[derive(Debug, Clone)]
pub struct LemmaCheck {
    pub tag: String,
    pub passed: bool,
}

#[derive(Debug, Clone)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// lhs/rhs pairs in the DSL, tagged by arity group.
const IDENTITIES: &[(&str, &str, &str)] = &[
    ("(2,1)a", "mul", "comul,id; id,cup"),
    ("(2,1)b", "mul", "id,comul; cup,id"),
    ("(1,2)a", "comul", "id,cap; mul,id"),
    ("(1,2)b", "comul", "cap,id; id,mul"),
    ("(1,1) snake left", "cap,id; id,cup", "id"),
    ("(1,1) snake right", "id,cap; cup,id", "id"),
    ("(1,1) unit left", "unit,id; mul", "id"),
    ("(1,1) unit right", "id,unit; mul", "id"),
    ("(1,1) counit left", "comul; counit,id", "id"),
    ("(1,1) counit right", "comul; id,counit", "id"),
    ("(1,1) bead", "comul; mul", "cap,id; mul,id; mul"),
    ("(3,1) associativity", "mul,id; mul", "id,mul; mul"),
    ("(1,3) coassociativity", "comul; comul,id", "comul; id,comul"),
    ("(0,2)", "unit; comul", "cap"),
    ("(2,0)", "mul; counit", "cup"),
    ("(1,0)a", "unit,id; cup", "counit"),
    ("(1,0)b", "id,unit; cup", "counit"),
    ("(0,1)a", "cap; counit,id", "unit"),
    ("(0,1)b", "cap; id,counit", "unit"),
    ("(0,0) circle", "cap; cup", "unit; comul; mul; counit"),
    ("(2,2)a", "mul; comul", "id,comul; mul,id"),
    ("(2,2)b", "mul; comul", "comul,id; id,mul"),
    ("(3,0)", "mul,id; cup", "id,mul; cup"),
];

/// Runs the whole identity suite on a structure. Returns the per-identity
/// report when everything passes; the first failure aborts with a witness
/// (both diagrams and both tensors).
pub fn lemma_suite(
    f: &FrobeniusStructure,
    opts: &EvalOptions,
) -> Result<LemmaReport, DiagramError> {
    let evaluator = Evaluator::new(f);
    let mut checks = Vec::new();
    for (tag, lhs_text, rhs_text) in IDENTITIES {
        let (lhs, rhs) = evaluate_pair(&evaluator, lhs_text, rhs_text, opts)?;
        if lhs != rhs {
            return Err(DiagramError::IdentityFailed {
                tag: (*tag).to_string(),
                witness: format!(
                    "lhs '{lhs_text}' evaluates to {lhs}, rhs '{rhs_text}' evaluates to {rhs}"
                ),
            });
        }
        checks.push(LemmaCheck {
            tag: (*tag).to_string(),
            passed: true,
        });
    }
    // circle value agrees with dim_1
    {
        let circle = parse_diagram("cap; cup")?;
        let t = evaluator.evaluate(&circle, opts)?;
        let passed = t.scalar_value() == f.fdim(1);
        if !passed {
            return Err(DiagramError::IdentityFailed {
                tag: "(0,0) value".into(),
                witness: format!("circle value {} != dim_1 {}", t.scalar_value(), f.fdim(1)),
            });
        }
        checks.push(LemmaCheck {
            tag: "(0,0) value".into(),
            passed,
        });
    }
    // special <=> B = 1 <=> eps(B .) = eps
    {
        let unit = f.algebra().unit_element();
        let b_is_unit = *f.lollipop() == unit;
        let uloll = f.uloll();
        let uloll_is_eps = uloll
            .iter()
            .zip(f.eps())
            .all(|(a, b): (&Scalar, &Scalar)| a == b);
        if b_is_unit != uloll_is_eps {
            return Err(DiagramError::IdentityFailed {
                tag: "special iff".into(),
                witness: format!(
                    "B == 1 is {b_is_unit} but eps(B .) == eps is {uloll_is_eps}"
                ),
            });
        }
        checks.push(LemmaCheck {
            tag: "special iff".into(),
            passed: true,
        });
    }
    Ok(LemmaReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{matrix_frobenius, s3, group_standard_form};
    use crate::linalg::Matrix;
    use crate::scalar::{FieldSpec, Scalar};

    #[test]
    fn suite_passes_on_reference_structures() {
        let fld = FieldSpec::Rational;
        let mut u = Matrix::identity(fld, 2);
        u.set(1, 1, Scalar::from_int(fld, 2));
        let (f, _) = matrix_frobenius(2, &u).unwrap();
        let report = lemma_suite(&f, &EvalOptions::default()).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.checks.len(), 25);

        let g = s3();
        let form = group_standard_form(fld, &g).unwrap();
        assert!(lemma_suite(&form, &EvalOptions::default())
            .unwrap()
            .all_passed());
    }

    #[test]
    fn corrupted_counit_fails_with_witness() {
        let fld = FieldSpec::Rational;
        let (f, _) = matrix_frobenius(2, &Matrix::identity(fld, 2)).unwrap();
        let mut eps = f.eps().to_vec();
        eps[0] = &eps[0] + &Scalar::from_int(fld, 1);
        let broken = f.with_eps_unchecked(eps);
        let err = lemma_suite(&broken, &EvalOptions::default()).unwrap_err();
        assert!(matches!(err, DiagramError::IdentityFailed { .. }));
    }
}
