//! Matrix-algebra suite: the trace-twist invariants on M_2 and M_3.

use super::{rand_invertible_matrix, rng, Ctx, SuiteReport};
use crate::builders::matrix_frobenius;
use crate::frobenius::{FrobeniusStructure, RationalSeries};
use crate::linalg::{invert, Matrix};
use crate::scalar::{FieldSpec, Scalar};

const SEED: u64 = 0x4d41_5452;

fn is_scalar_matrix(u: &Matrix) -> bool {
    let d = u.rows();
    let lead = u.get(0, 0);
    for r in 0..d {
        for c in 0..d {
            let expected = if r == c {
                lead.clone()
            } else {
                Scalar::zero(u.field())
            };
            if *u.get(r, c) != expected {
                return false;
            }
        }
    }
    true
}

fn check_one(ctx: &mut Ctx, label: &str, d: usize, u: &Matrix) {
    let field = u.field();
    let (f, pred) = match matrix_frobenius(d, u) {
        Ok(x) => x,
        Err(e) => {
            ctx.check(label, false, format!("builder failed: {e}"));
            return;
        }
    };
    let u_inv = invert(u).expect("invertible");
    let tr_u = u.trace();
    let tr_u_inv = u_inv.trace();
    let unit = f.algebra().unit_element();
    let ok_loll = *f.lollipop() == unit.scale(&tr_u_inv);
    let classification = match f.classify() {
        Ok(c) => c,
        Err(e) => {
            ctx.check(label, false, format!("classify failed: {e}"));
            return;
        }
    };
    let ok_lambda_prime = classification.counit_scale == tr_u;
    let ok_dim1 = classification.fdim == &tr_u * &tr_u_inv && classification.fdim == pred.dim1;
    let expected_series = RationalSeries::new(
        field,
        vec![tr_u.clone()],
        vec![Scalar::one(field), tr_u_inv.neg()],
    );
    let ok_series = f
        .rational_closed_form()
        .map(|s| s.equivalent(&expected_series))
        .unwrap_or(false);
    let ok_symmetry = classification.symmetric == is_scalar_matrix(u);
    let ok_ws_branch = if tr_u_inv.is_zero() {
        classification.weakly_symmetric && !classification.symmetric
    } else {
        true
    };
    let passed = ok_loll && ok_lambda_prime && ok_dim1 && ok_series && ok_symmetry && ok_ws_branch;
    ctx.check(
        label,
        passed,
        format!(
            "B=Tr(u^-1)1:{ok_loll} lambda'=Tr(u):{ok_lambda_prime} dim1:{ok_dim1} \
             series:{ok_series} symmetric-iff-scalar:{ok_symmetry} traceless-branch:{ok_ws_branch}"
        ),
    );
}

/// The structures this suite exercises, for reuse by the series suite.
pub(crate) fn structures() -> Vec<(String, FrobeniusStructure)> {
    let mut out = Vec::new();
    let mut r = rng(SEED);
    for d in [2usize, 3] {
        for i in 0..20 {
            let u = rand_invertible_matrix(&mut r, d);
            let (f, _) = matrix_frobenius(d, &u).expect("invertible twist");
            out.push((format!("matrix d={d} random #{i}"), f));
        }
    }
    let fld = FieldSpec::Rational;
    let mut diag = Matrix::identity(fld, 2);
    diag.set(1, 1, Scalar::from_int(fld, -1));
    out.push((
        "matrix d=2 u=diag(1,-1)".into(),
        matrix_frobenius(2, &diag).expect("invertible").0,
    ));
    let mut shear = Matrix::identity(fld, 2);
    shear.set(0, 1, Scalar::from_int(fld, 1));
    out.push((
        "matrix d=2 u=[[1,1],[0,1]]".into(),
        matrix_frobenius(2, &shear).expect("invertible").0,
    ));
    out
}

pub fn suite_matrix() -> SuiteReport {
    let mut ctx = Ctx::new();
    let mut r = rng(SEED);
    for d in [2usize, 3] {
        for i in 0..20 {
            let u = rand_invertible_matrix(&mut r, d);
            check_one(&mut ctx, &format!("matrix d={d} random #{i}"), d, &u);
        }
    }
    // fixed branch witnesses
    let fld = FieldSpec::Rational;
    check_one(&mut ctx, "matrix d=2 u=I", 2, &Matrix::identity(fld, 2));
    let mut diag = Matrix::identity(fld, 2);
    diag.set(1, 1, Scalar::from_int(fld, -1));
    check_one(&mut ctx, "matrix d=2 u=diag(1,-1)", 2, &diag);
    let mut shear = Matrix::identity(fld, 2);
    shear.set(0, 1, Scalar::from_int(fld, 1));
    check_one(&mut ctx, "matrix d=2 u=[[1,1],[0,1]]", 2, &shear);
    ctx.finish("matrix")
}
