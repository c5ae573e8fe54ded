//! Named verification suites over the stock families, with one reusable
//! check list per suite. The CLI `verify` command prints these; the
//! acceptance test target asserts them.

mod hilbert;
mod ktwist;
mod lemma;
mod matrix;
mod s3;
mod semisimple;
mod spider;
mod taft;
mod uqsl2_n2;
mod uqsl2_n3;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{element_inverse, Algebra, Element};
use crate::linalg::{invert, Matrix};
use crate::scalar::{FieldSpec, Scalar};
use std::sync::Arc;

pub use hilbert::suite_hilbert;
pub use ktwist::suite_ktwist;
pub use lemma::{suite_lemma, suite_lemma_on};
pub use matrix::suite_matrix;
pub use s3::suite_s3;
pub use semisimple::suite_semisimple;
pub use spider::suite_spider;
pub use taft::suite_taft;
pub use uqsl2_n2::suite_uqsl2_n2;
pub use uqsl2_n3::suite_uqsl2_n3;

#[derive(Debug, Clone, Error)]
pub enum VerifyError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("suite setup failed: {0}")]
    Setup(String),
}

/// One named check with a pass/fail verdict and a short detail string.
#[derive(Debug, Clone)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Collector for suite checks.
pub(crate) struct Ctx {
    checks: Vec<Check>,
}

impl Ctx {
    pub(crate) fn new() -> Self {
        Ctx { checks: Vec::new() }
    }

    /// Records a boolean check.
    pub(crate) fn check(&mut self, id: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            id: id.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records a check that may fail by error; the error text becomes the
    /// failure detail.
    pub(crate) fn check_result<E: std::fmt::Display>(
        &mut self,
        id: impl Into<String>,
        result: Result<bool, E>,
        detail: impl Into<String>,
    ) {
        match result {
            Ok(passed) => self.check(id, passed, detail),
            Err(e) => self.check(id, false, format!("error: {e}")),
        }
    }

    pub(crate) fn finish(self, name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            checks: self.checks,
        }
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "matrix",
    "semisimple",
    "s3",
    "uqsl2-n2",
    "uqsl2-n3",
    "taft",
    "ktwist",
    "lemma",
    "spider",
    "hilbert",
];

/// Runs one suite by name.
pub fn run_suite(name: &str) -> Result<SuiteReport, VerifyError> {
    match name {
        "matrix" => Ok(suite_matrix()),
        "semisimple" => Ok(suite_semisimple()),
        "s3" => Ok(suite_s3()),
        "uqsl2-n2" => Ok(suite_uqsl2_n2()),
        "uqsl2-n3" => Ok(suite_uqsl2_n3()),
        "taft" => Ok(suite_taft()),
        "ktwist" => Ok(suite_ktwist()),
        "lemma" => Ok(suite_lemma()),
        "spider" => Ok(suite_spider()),
        "hilbert" => Ok(suite_hilbert()),
        other => Err(VerifyError::UnknownSuite(other.to_string())),
    }
}

// --- deterministic sampling helpers shared by the suites ---

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small random rational embedded in `field`: numerator -9..=9, denominator 1..=3.
pub(crate) fn rand_rational(rng: &mut ChaCha8Rng, field: FieldSpec) -> Scalar {
    let numer = rng.random_range(-9..=9i64);
    let denom = rng.random_range(1..=3i64);
    Scalar::from_ratio(field, numer, denom)
}

pub(crate) fn rand_nonzero_rational(rng: &mut ChaCha8Rng, field: FieldSpec) -> Scalar {
    loop {
        let s = rand_rational(rng, field);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Random invertible d x d matrix over Q (resampled until invertible).
pub(crate) fn rand_invertible_matrix(rng: &mut ChaCha8Rng, d: usize) -> Matrix {
    let field = FieldSpec::Rational;
    loop {
        let m = Matrix::from_fn(field, d, d, |_, _| rand_rational(rng, field))
            .expect("uniform field");
        if invert(&m).is_ok() {
            return m;
        }
    }
}

/// Random invertible element with small rational coefficients.
pub(crate) fn rand_invertible_element(rng: &mut ChaCha8Rng, algebra: &Arc<Algebra>) -> Element {
    let field = algebra.field();
    loop {
        let coeffs: Vec<Scalar> = (0..algebra.dim())
            .map(|_| rand_rational(rng, field))
            .collect();
        let candidate = algebra.element(coeffs).expect("uniform coeffs");
        if element_inverse(&candidate).is_ok() {
            return candidate;
        }
    }
}

/// Whether `target` lies in the span of `vectors`.
pub(crate) fn in_span(vectors: &[Element], target: &Element) -> bool {
    let field = target.algebra().field();
    let rows: Vec<Vec<Scalar>> = vectors.iter().map(|v| v.coeffs().to_vec()).collect();
    let base = match Matrix::from_rows(field, rows.clone()) {
        Ok(m) => m.rank(),
        Err(_) => return false,
    };
    let mut extended = rows;
    extended.push(target.coeffs().to_vec());
    match Matrix::from_rows(field, extended) {
        Ok(m) => m.rank() == base,
        Err(_) => false,
    }
}
