//! Group-algebra suite on K S_3: the special twist family, central twists,
//! weakly symmetric strata, and the frozen class-function series.

use std::sync::Arc;

use super::{rand_rational, rand_nonzero_rational, rng, Ctx, SuiteReport};
use crate::algebra::{element_inverse, Algebra, Element};
use crate::builders::{conjugacy_classes, group_standard_form, s3, GroupTable};
use crate::frobenius::{FrobeniusStructure, RationalSeries};
use crate::scalar::{FieldSpec, Scalar};

const SEED: u64 = 0x5333_5333;
const F: FieldSpec = FieldSpec::Rational;

// basis order: e, r, s, t, rs, sr
fn el(algebra: &Arc<Algebra>, coeffs: [Scalar; 6]) -> Element {
    algebra.element(coeffs.to_vec()).expect("six coefficients")
}

fn qi(n: i64) -> Scalar {
    Scalar::from_int(F, n)
}

/// e/6 + a(rs - sr) + b(r - t) + c(s - t)
fn special_family_inverse(algebra: &Arc<Algebra>, a: &Scalar, b: &Scalar, c: &Scalar) -> Element {
    el(
        algebra,
        [
            Scalar::from_ratio(F, 1, 6),
            b.clone(),
            c.clone(),
            &b.neg() - c,
            a.clone(),
            a.neg(),
        ],
    )
}

/// d = 1 + 108 (a^2 - (b^2 + bc + c^2))
fn discriminant(a: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
    let quad = &(a * a) - &(&(&(b * b) + &(b * c)) + &(c * c));
    &qi(1) + &(&qi(108) * &quad)
}

/// circ e + ((6 - circ)/2)(rs + sr) + 9(2 - circ)(a(rs - sr) + b(r - t) + c(s - t))
fn predicted_twisting_element(
    algebra: &Arc<Algebra>,
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
    circ: &Scalar,
) -> Element {
    let half_rest = (&qi(6) - circ).div(&qi(2)).expect("two");
    let scale = &qi(9) * &(&qi(2) - circ);
    el(
        algebra,
        [
            circ.clone(),
            &scale * b,
            &scale * c,
            &scale * &(&b.neg() - c),
            &half_rest + &(&scale * a),
            &half_rest - &(&scale * a),
        ],
    )
}

fn frozen_series(which: &str) -> RationalSeries {
    match which {
        // identity twist: 1/(1 - 6x)
        "e" => RationalSeries::new(F, vec![qi(1)], vec![qi(1), qi(-6)]),
        // transposition twist: 2x/((1 - 6x)(1 + 6x))
        "r" => RationalSeries::new(F, vec![qi(0), qi(2)], vec![qi(1), qi(0), qi(-36)]),
        // 3-cycle twist: 3x/((1 - 6x)(1 + 3x))
        "rs" => RationalSeries::new(F, vec![qi(0), qi(3)], vec![qi(1), qi(-3), qi(-18)]),
        _ => unreachable!(),
    }
}

pub(crate) fn structures() -> Vec<(String, FrobeniusStructure)> {
    let g = s3();
    let base = group_standard_form(F, &g).expect("standard form");
    let algebra = Arc::clone(base.algebra());
    let mut out = Vec::new();
    let mut r = rng(SEED);
    for i in 0..10 {
        let (a, b, c) = loop {
            let (a, b, c) = (
                rand_rational(&mut r, F),
                rand_rational(&mut r, F),
                rand_rational(&mut r, F),
            );
            if !discriminant(&a, &b, &c).is_zero() {
                break (a, b, c);
            }
        };
        let u_inv = special_family_inverse(&algebra, &a, &b, &c);
        let u = element_inverse(&u_inv).expect("d != 0");
        out.push((format!("s3 special twist #{i}"), base.twist(&u).expect("twist")));
    }
    for label in ["e", "r", "rs"] {
        let idx = g.index_of(label).expect("label");
        let u = algebra.basis_element(idx);
        out.push((
            format!("s3 group-element twist {label}"),
            base.twist(&u).expect("twist"),
        ));
    }
    out.push(("s3 standard form".into(), base));
    out
}

fn check_special_family(ctx: &mut Ctx, base: &FrobeniusStructure, g: &GroupTable) {
    let algebra = base.algebra();
    let mut r = rng(SEED);
    for i in 0..10 {
        let (a, b, c) = loop {
            let (a, b, c) = (
                rand_rational(&mut r, F),
                rand_rational(&mut r, F),
                rand_rational(&mut r, F),
            );
            if !discriminant(&a, &b, &c).is_zero() {
                break (a, b, c);
            }
        };
        let id = format!("special twist #{i}");
        let d = discriminant(&a, &b, &c);
        let circ = (&qi(2) * &(&qi(2) + &d)).div(&d).expect("d != 0");
        let u_inv = special_family_inverse(algebra, &a, &b, &c);
        let u = match element_inverse(&u_inv) {
            Ok(u) => u,
            Err(e) => {
                ctx.check(id, false, format!("inverse failed: {e}"));
                continue;
            }
        };
        let ok_formula = u == predicted_twisting_element(algebra, &a, &b, &c, &circ);
        match base.twist(&u) {
            Ok(f) => {
                let cls = f.classify();
                let ok_special = cls.as_ref().map(|c| c.special).unwrap_or(false);
                let ok_dim = f.fdim(1) == circ;
                ctx.check(
                    id,
                    ok_formula && ok_special && ok_dim,
                    format!(
                        "inverse-formula:{ok_formula} special:{ok_special} dim1=2(2+d)/d:{ok_dim}"
                    ),
                );
            }
            Err(e) => ctx.check(id, false, format!("twist failed: {e}")),
        }
    }
    let _ = g;
}

fn check_central_twists(ctx: &mut Ctx, base: &FrobeniusStructure) {
    let algebra = base.algebra();
    let mut r = rng(SEED + 1);
    let mut done = 0;
    while done < 5 {
        let (alpha, beta, gamma) = (
            rand_rational(&mut r, F),
            rand_rational(&mut r, F),
            rand_rational(&mut r, F),
        );
        let u = el(
            algebra,
            [
                alpha.clone(),
                beta.clone(),
                beta.clone(),
                beta.clone(),
                gamma.clone(),
                gamma.clone(),
            ],
        );
        if element_inverse(&u).is_err() {
            continue;
        }
        let id = format!("central twist #{done}");
        match base.twist(&u) {
            Ok(f) => {
                let cls = f.classify();
                let ok_sym = cls.as_ref().map(|c| c.symmetric).unwrap_or(false);
                let ok_dim = f.fdim(1) == qi(6);
                let ok_uloll = f.uloll() == vec![qi(6), qi(0), qi(0), qi(0), qi(0), qi(0)];
                ctx.check(
                    id,
                    ok_sym && ok_dim && ok_uloll,
                    format!("symmetric:{ok_sym} dim1=6:{ok_dim} uloll={{6,0,0,0,0,0}}:{ok_uloll}"),
                );
            }
            Err(e) => ctx.check(id, false, format!("twist failed: {e}")),
        }
        done += 1;
    }
}

fn check_asymmetric_stratum(ctx: &mut Ctx, base: &FrobeniusStructure) {
    let algebra = base.algebra();
    let mut r = rng(SEED + 2);
    let mut done = 0;
    while done < 5 {
        // alpha = gamma, generic a, b, c nonzero
        let alpha = rand_rational(&mut r, F);
        let beta = rand_rational(&mut r, F);
        let a = rand_nonzero_rational(&mut r, F);
        let b = rand_nonzero_rational(&mut r, F);
        let c = rand_nonzero_rational(&mut r, F);
        let u = el(
            algebra,
            [
                alpha.clone(),
                &beta + &b,
                &beta + &c,
                &beta - &(&b + &c),
                &alpha + &a,
                &alpha - &a,
            ],
        );
        if element_inverse(&u).is_err() {
            continue;
        }
        let id = format!("weakly symmetric stratum #{done}");
        match base.twist(&u) {
            Ok(f) => {
                let cls = f.classify();
                let (ok_ws, ok_asym) = cls
                    .as_ref()
                    .map(|c| (c.weakly_symmetric, !c.symmetric))
                    .unwrap_or((false, false));
                let ok_uloll = f.uloll() == vec![qi(2), qi(0), qi(0), qi(0), qi(2), qi(2)];
                let ok_dim = f.fdim(1) == qi(2);
                ctx.check(
                    id,
                    ok_ws && ok_asym && ok_uloll && ok_dim,
                    format!(
                        "weakly-symmetric:{ok_ws} asymmetric:{ok_asym} \
                         uloll={{2,0,0,0,2,2}}:{ok_uloll} dim1=2:{ok_dim}"
                    ),
                );
            }
            Err(e) => ctx.check(id, false, format!("twist failed: {e}")),
        }
        done += 1;
    }
}

fn check_class_function_series(ctx: &mut Ctx, base: &FrobeniusStructure, g: &GroupTable) {
    let algebra = base.algebra();
    for (label, frozen) in [("e", "e"), ("r", "r"), ("rs", "rs")] {
        let idx = g.index_of(label).expect("label");
        let u = algebra.basis_element(idx);
        let id = format!("class series u={label}");
        match base.twist(&u).and_then(|f| f.rational_closed_form()) {
            Ok(series) => {
                let expected = frozen_series(frozen);
                ctx.check(
                    id,
                    series.equivalent(&expected),
                    format!("got {series}, expected {expected}"),
                );
            }
            Err(e) => ctx.check(id, false, e.to_string()),
        }
    }
    // conjugation invariance: every member of a class gives the same series
    for class in conjugacy_classes(g) {
        let series: Vec<RationalSeries> = class
            .iter()
            .map(|&i| {
                base.twist(&algebra.basis_element(i))
                    .and_then(|f| f.rational_closed_form())
                    .expect("twist by group element")
            })
            .collect();
        let all_match = series.windows(2).all(|w| w[0].equivalent(&w[1]));
        let labels: Vec<&str> = class.iter().map(|&i| g.labels()[i].as_str()).collect();
        ctx.check(
            format!("conjugation invariance on {{{}}}", labels.join(",")),
            all_match,
            "all class members give one series",
        );
    }
    // invariance under conjugation for a non-group-element twist as well
    let mut r = rng(SEED + 3);
    let u = super::rand_invertible_element(&mut r, algebra);
    let base_dims: Vec<Scalar> = {
        let f = base.twist(&u).expect("twist");
        (0..=4).map(|j| f.fdim(j)).collect()
    };
    let mut ok = true;
    for h in 0..g.order() {
        let h_el = algebra.basis_element(h);
        let h_inv = algebra.basis_element(g.inverse(h));
        let conj = &(&h_el * &u) * &h_inv;
        let f = base.twist(&conj).expect("twist");
        for (j, expected) in base_dims.iter().enumerate() {
            if f.fdim(j as u32) != *expected {
                ok = false;
            }
        }
    }
    ctx.check(
        "conjugation invariance of dims (random twist)",
        ok,
        "dims j<=4 equal for all conjugates",
    );
}

pub fn suite_s3() -> SuiteReport {
    let mut ctx = Ctx::new();
    let g = s3();
    match group_standard_form(F, &g) {
        Ok(base) => {
            check_special_family(&mut ctx, &base, &g);
            check_central_twists(&mut ctx, &base);
            check_asymmetric_stratum(&mut ctx, &base);
            check_class_function_series(&mut ctx, &base, &g);
        }
        Err(e) => ctx.check("standard form", false, e.to_string()),
    }
    ctx.finish("s3")
}
