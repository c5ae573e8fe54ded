//! Canonical-form fuzzing: every random connected diagram must evaluate to
//! the same tensor as its standard form with the same bead count.

use crate::exec;
use crate::frobenius::FrobeniusStructure;

use super::{
    canonical_form, random_connected_diagram, standard_diagram, DiagramError, EvalOptions,
    Evaluator, StandardForm,
};

#[derive(Debug, Clone)]
pub struct SpiderOptions {
    pub seed: u64,
    pub count: usize,
    pub max_gens: usize,
    pub max_width: usize,
}

impl Default for SpiderOptions {
    fn default() -> Self {
        SpiderOptions {
            seed: 42,
            count: 200,
            max_gens: 8,
            max_width: 4,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SpiderFailure {
    pub case_index: usize,
    pub diagram: String,
    pub standard: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone)]
pub struct SpiderOutcome {
    pub passed: usize,
    pub failures: Vec<SpiderFailure>,
}

impl SpiderOutcome {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `count` fuzz cases against one structure. Case i uses seed
/// `seed + i`, so outcomes are reproducible and independent of scheduling.
pub fn spider_check(
    f: &FrobeniusStructure,
    opts: &SpiderOptions,
) -> Result<SpiderOutcome, DiagramError> {
    let evaluator = Evaluator::new(f);
    let eval_opts = EvalOptions {
        max_width: opts.max_width,
    };
    let results = exec::map_indexed(opts.count, |i| -> Result<Option<SpiderFailure>, DiagramError> {
        let d = random_connected_diagram(opts.seed.wrapping_add(i as u64), opts.max_gens, opts.max_width)?;
        let form = canonical_form(&d)?;
        let std_d = standard_diagram(form);
        let lhs = evaluator.evaluate(&d, &eval_opts)?;
        let rhs = evaluator.evaluate(&std_d, &eval_opts)?;
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some(SpiderFailure {
                case_index: i,
                diagram: d.to_string(),
                standard: std_d.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }))
        }
    });
    let mut outcome = SpiderOutcome {
        passed: 0,
        failures: Vec::new(),
    };
    for r in results {
        match r? {
            None => outcome.passed += 1,
            Some(fail) => outcome.failures.push(fail),
        }
    }
    Ok(outcome)
}

/// Stacking j1 beads on j2 beads evaluates like j1 + j2 beads.
pub fn bead_additivity(
    f: &FrobeniusStructure,
    j1: usize,
    j2: usize,
) -> Result<bool, DiagramError> {
    let evaluator = Evaluator::new(f);
    let opts = EvalOptions::default();
    let wire = |j| StandardForm {
        inputs: 1,
        outputs: 1,
        beads: j,
    };
    let stacked = standard_diagram(wire(j1)).compose(&standard_diagram(wire(j2)))?;
    let lhs = evaluator.evaluate(&stacked, &opts)?;
    let rhs = evaluator.evaluate(&standard_diagram(wire(j1 + j2)), &opts)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::matrix_frobenius;
    use crate::linalg::Matrix;
    use crate::scalar::{FieldSpec, Scalar};

    #[test]
    fn small_fuzz_on_m2() {
        let fld = FieldSpec::Rational;
        let mut u = Matrix::identity(fld, 2);
        u.set(1, 1, Scalar::from_int(fld, 2));
        let (f, _) = matrix_frobenius(2, &u).unwrap();
        let outcome = spider_check(
            &f,
            &SpiderOptions {
                seed: 1,
                count: 40,
                max_gens: 7,
                max_width: 4,
            },
        )
        .unwrap();
        assert!(outcome.all_passed(), "{:?}", outcome.failures.first());
        assert_eq!(outcome.passed, 40);
    }

    #[test]
    fn beads_add() {
        let fld = FieldSpec::Rational;
        let mut u = Matrix::identity(fld, 2);
        u.set(0, 1, Scalar::from_int(fld, 3));
        let (f, _) = matrix_frobenius(2, &u).unwrap();
        for (j1, j2) in [(0, 0), (1, 2), (3, 1)] {
            assert!(bead_additivity(&f, j1, j2).unwrap());
        }
    }
}
