//! Block-sum suite on K + K + M_2: the special form, block twists, and the
//! weakly symmetric strata.

use super::{rand_invertible_matrix, rng, Ctx, SuiteReport};
use crate::builders::{block_twist, semisimple_special_form, weakly_symmetric_block_form};
use crate::frobenius::FrobeniusStructure;
use crate::linalg::{invert, Matrix};
use crate::scalar::{FieldSpec, Scalar};

const SEED: u64 = 0x424c_4f43;
const DIMS: &[usize] = &[1, 1, 2];

fn traceless_inverse_2x2(field: FieldSpec) -> Matrix {
    let mut m = Matrix::zero(field, 2, 2);
    m.set(0, 0, Scalar::from_int(field, 1));
    m.set(1, 1, Scalar::from_int(field, -1));
    m
}

pub(crate) fn structures() -> Vec<(String, FrobeniusStructure)> {
    let field = FieldSpec::Rational;
    let mut out = Vec::new();
    out.push((
        "blocks 1+1+2 special".into(),
        semisimple_special_form(field, DIMS).expect("special form"),
    ));
    let mut r = rng(SEED);
    for i in 0..8 {
        let us = vec![
            rand_invertible_matrix(&mut r, 1),
            rand_invertible_matrix(&mut r, 1),
            rand_invertible_matrix(&mut r, 2),
        ];
        let (f, _) = block_twist(field, DIMS, &us).expect("block twist");
        out.push((format!("blocks 1+1+2 twist #{i}"), f));
    }
    let one = Scalar::from_int(field, 1);
    let two = Scalar::from_int(field, 2);
    let (ws, _) = weakly_symmetric_block_form(
        field,
        DIMS,
        &[(0, one.clone()), (1, two)],
        &[(2, traceless_inverse_2x2(field))],
    )
    .expect("stratum");
    out.push(("blocks 1+1+2 weakly symmetric I={0,1}".into(), ws));
    out
}

pub fn suite_semisimple() -> SuiteReport {
    let mut ctx = Ctx::new();
    let field = FieldSpec::Rational;

    // the distinguished form: special, symmetric, dim1 = 6
    match semisimple_special_form(field, DIMS) {
        Ok(f) => {
            let c = f.classify();
            let ok = c
                .as_ref()
                .map(|c| c.special && c.symmetric && c.fdim == Scalar::from_int(field, 6))
                .unwrap_or(false);
            ctx.check(
                "special form on 1+1+2",
                ok,
                format!("classification {c:?}"),
            );
        }
        Err(e) => ctx.check("special form on 1+1+2", false, e.to_string()),
    }

    // block twists: dim1 = sum Tr(u_i) Tr(u_i^{-1}) and the block series
    let mut r = rng(SEED);
    for i in 0..8 {
        let us = vec![
            rand_invertible_matrix(&mut r, 1),
            rand_invertible_matrix(&mut r, 1),
            rand_invertible_matrix(&mut r, 2),
        ];
        let id = format!("block twist #{i}");
        match block_twist(field, DIMS, &us) {
            Ok((f, pred)) => {
                let mut expected_dim1 = Scalar::zero(field);
                for u in &us {
                    expected_dim1 += &(&u.trace() * &invert(u).expect("invertible").trace());
                }
                let ok_dim1 = f.fdim(1) == expected_dim1 && pred.dim1 == expected_dim1;
                let ok_series = f
                    .rational_closed_form()
                    .map(|s| s.equivalent(&pred.series))
                    .unwrap_or(false);
                let ok_lambda = f.fdim(0) == pred.lambda_prime;
                ctx.check(
                    id,
                    ok_dim1 && ok_series && ok_lambda,
                    format!("dim1:{ok_dim1} series:{ok_series} lambda':{ok_lambda}"),
                );
            }
            Err(e) => ctx.check(id, false, e.to_string()),
        }
    }

    // weakly symmetric strata: dim1 = sum over included blocks of d_i^2
    let one = Scalar::from_int(field, 1);
    let strata: Vec<(&str, Vec<(usize, Scalar)>, Vec<(usize, Matrix)>, i64)> = vec![
        (
            "stratum I={0,1}",
            vec![(0, one.clone()), (1, one.clone())],
            vec![(2, traceless_inverse_2x2(field))],
            2,
        ),
        (
            "stratum I=all (symmetric special)",
            vec![(0, one.clone()), (1, one.clone()), (2, one.clone())],
            vec![],
            6,
        ),
    ];
    for (id, included, excluded, expected) in strata {
        match weakly_symmetric_block_form(field, DIMS, &included, &excluded) {
            Ok((f, pred)) => {
                let expected = Scalar::from_int(field, expected);
                let c = f.classify();
                let ok_class = c.as_ref().map(|c| c.weakly_symmetric).unwrap_or(false);
                let ok_dim = f.fdim(1) == expected && pred.dim1 == expected;
                let ok_series = f
                    .rational_closed_form()
                    .map(|s| s.equivalent(&pred.series))
                    .unwrap_or(false);
                ctx.check(
                    id,
                    ok_class && ok_dim && ok_series,
                    format!("weakly-symmetric:{ok_class} dim1:{ok_dim} series:{ok_series}"),
                );
            }
            Err(e) => ctx.check(id, false, e.to_string()),
        }
    }
    ctx.finish("semisimple")
}
