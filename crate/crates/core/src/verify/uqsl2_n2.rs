//! Suite for u_q(sl2) at n = 2 (q = -1): the full 8-parameter twist moduli.
//!
//! Twisting elements are written u = a 1 + b K + c FE + d KFE + alpha E
//! + beta KE + gamma F + delta KF; invertibility is a^2 != b^2.

use std::sync::Arc;

use super::{in_span, rand_rational, rng, Ctx, SuiteReport};
use crate::algebra::{center, commutator_subspace, element_inverse, Algebra, Element};
use crate::builders::{pbw_index, uqsl2, uqsl2_integral_form};
use crate::frobenius::{FrobeniusStructure, RationalSeries};
use crate::scalar::{FieldSpec, Scalar};

const SEED: u64 = 0x7571_4e32;

#[derive(Clone)]
struct Params {
    a: Scalar,
    b: Scalar,
    c: Scalar,
    d: Scalar,
    alpha: Scalar,
    beta: Scalar,
    gamma: Scalar,
    delta: Scalar,
}

fn field() -> FieldSpec {
    FieldSpec::cyclotomic(2).expect("order 2")
}

fn idx(i: usize, j: usize, k: usize) -> usize {
    pbw_index(2, i, j, k)
}

fn build_u(algebra: &Arc<Algebra>, p: &Params) -> Element {
    let f = algebra.field();
    let mut v = vec![Scalar::zero(f); 8];
    v[idx(0, 0, 0)] = p.a.clone();
    v[idx(1, 0, 0)] = p.b.clone();
    v[idx(0, 1, 1)] = p.c.clone();
    v[idx(1, 1, 1)] = p.d.clone();
    v[idx(0, 0, 1)] = p.alpha.clone();
    v[idx(1, 0, 1)] = p.beta.clone();
    v[idx(0, 1, 0)] = p.gamma.clone();
    v[idx(1, 1, 0)] = p.delta.clone();
    algebra.element(v).expect("eight coefficients")
}

/// The closed-form inverse of u, valid when a^2 != b^2.
fn predicted_inverse(algebra: &Arc<Algebra>, p: &Params) -> Element {
    let f = algebra.field();
    let a2_b2 = &(&p.a * &p.a) - &(&p.b * &p.b);
    let inv_a2_b2 = a2_b2.inv().expect("a^2 != b^2");
    let a2_plus_b2 = &(&p.a * &p.a) + &(&p.b * &p.b);
    let two = Scalar::from_int(f, 2);
    // coefficient on EF: ((a^2 + b^2)c - 2a(bd + alpha gamma - beta delta))/(a^2 - b^2)
    let ef_inner = &(&a2_plus_b2 * &p.c)
        - &(&(&two * &p.a)
            * &(&(&p.b * &p.d) + &(&(&p.alpha * &p.gamma) - &(&p.beta * &p.delta))));
    let ef_coeff = (&ef_inner * &inv_a2_b2).neg();
    // coefficient on KEF: ((a^2 + b^2)d - 2b(ac - alpha gamma + beta delta))/(a^2 - b^2)
    let kef_inner = &(&a2_plus_b2 * &p.d)
        - &(&(&two * &p.b)
            * &(&(&p.a * &p.c) - &(&(&p.alpha * &p.gamma) - &(&p.beta * &p.delta))));
    let kef_coeff = (&kef_inner * &inv_a2_b2).neg();
    let mut v = vec![Scalar::zero(f); 8];
    v[idx(0, 0, 0)] = &p.a * &inv_a2_b2;
    v[idx(1, 0, 0)] = &p.b.neg() * &inv_a2_b2;
    v[idx(0, 1, 1)] = &ef_coeff * &inv_a2_b2;
    v[idx(1, 1, 1)] = &kef_coeff * &inv_a2_b2;
    v[idx(0, 0, 1)] = &p.alpha.neg() * &inv_a2_b2;
    v[idx(1, 0, 1)] = &p.beta.neg() * &inv_a2_b2;
    v[idx(0, 1, 0)] = &p.gamma.neg() * &inv_a2_b2;
    v[idx(1, 1, 0)] = &p.delta.neg() * &inv_a2_b2;
    algebra.element(v).expect("eight coefficients")
}

/// eps_u on the basis (1, E, F, FE, K, KE, KF, KFE):
/// (d, delta, beta, b, c, -gamma, -alpha, a).
fn predicted_eps(p: &Params) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(field()); 8];
    v[idx(0, 0, 0)] = p.d.clone();
    v[idx(0, 0, 1)] = p.delta.clone();
    v[idx(0, 1, 0)] = p.beta.clone();
    v[idx(0, 1, 1)] = p.b.clone();
    v[idx(1, 0, 0)] = p.c.clone();
    v[idx(1, 0, 1)] = p.gamma.neg();
    v[idx(1, 1, 0)] = p.alpha.neg();
    v[idx(1, 1, 1)] = p.a.clone();
    v
}

fn sample(rngv: &mut rand_chacha::ChaCha8Rng, symmetric: bool) -> Params {
    let f = field();
    loop {
        let p = if symmetric {
            Params {
                a: Scalar::zero(f),
                b: rand_rational(rngv, f),
                c: rand_rational(rngv, f),
                d: rand_rational(rngv, f),
                alpha: Scalar::zero(f),
                beta: Scalar::zero(f),
                gamma: Scalar::zero(f),
                delta: Scalar::zero(f),
            }
        } else {
            Params {
                a: rand_rational(rngv, f),
                b: rand_rational(rngv, f),
                c: rand_rational(rngv, f),
                d: rand_rational(rngv, f),
                alpha: rand_rational(rngv, f),
                beta: rand_rational(rngv, f),
                gamma: rand_rational(rngv, f),
                delta: rand_rational(rngv, f),
            }
        };
        let a2 = &p.a * &p.a;
        let b2 = &p.b * &p.b;
        if a2 != b2 {
            return p;
        }
    }
}

fn is_symmetric_locus(p: &Params) -> bool {
    p.a.is_zero()
        && p.alpha.is_zero()
        && p.beta.is_zero()
        && p.gamma.is_zero()
        && p.delta.is_zero()
}

fn check_params(ctx: &mut Ctx, id: &str, base: &FrobeniusStructure, p: &Params) {
    let algebra = base.algebra();
    let f = algebra.field();
    let u = build_u(algebra, p);
    let ok_inverse = match element_inverse(&u) {
        Ok(got) => got == predicted_inverse(algebra, p),
        Err(e) => {
            ctx.check(id, false, format!("inverse failed: {e}"));
            return;
        }
    };
    let twisted = match base.twist(&u) {
        Ok(t) => t,
        Err(e) => {
            ctx.check(id, false, format!("twist failed: {e}"));
            return;
        }
    };
    let ok_eps = twisted.eps() == predicted_eps(p);
    // B = (8b/(b^2 - a^2)) FE
    let b2_a2 = &(&p.b * &p.b) - &(&p.a * &p.a);
    let loll_scale = (&Scalar::from_int(f, 8) * &p.b).div(&b2_a2).expect("nonzero");
    let expected_loll = algebra.basis_element(idx(0, 1, 1)).scale(&loll_scale);
    let ok_loll = *twisted.lollipop() == expected_loll;
    // dim_1 = 8 b^2/(b^2 - a^2); dim_j = 0 for j >= 2
    let expected_dim1 = (&Scalar::from_int(f, 8) * &(&p.b * &p.b))
        .div(&b2_a2)
        .expect("nonzero");
    let ok_dim1 = twisted.fdim(1) == expected_dim1;
    let ok_higher = (2..=4u32).all(|j| twisted.fdim(j).is_zero());
    let expected_series = RationalSeries::new(f, vec![p.d.clone(), expected_dim1], vec![Scalar::one(f)]);
    let ok_series = twisted
        .rational_closed_form()
        .map(|s| s.equivalent(&expected_series))
        .unwrap_or(false);
    let cls = twisted.classify();
    let (got_sym, got_ws, got_special) = cls
        .as_ref()
        .map(|c| (c.symmetric, c.weakly_symmetric, c.special))
        .unwrap_or((false, false, true));
    let ok_class = got_ws && !got_special && got_sym == is_symmetric_locus(p);
    ctx.check(
        id,
        ok_inverse && ok_eps && ok_loll && ok_dim1 && ok_higher && ok_series && ok_class,
        format!(
            "inverse:{ok_inverse} eps:{ok_eps} B:{ok_loll} dim1:{ok_dim1} higher:{ok_higher} \
             series:{ok_series} class(ws,!special,sym-iff-locus):{ok_class}"
        ),
    );
}

pub(crate) fn structures() -> Vec<(String, FrobeniusStructure)> {
    let base = uqsl2_integral_form(2).expect("integral form");
    let algebra = Arc::clone(base.algebra());
    let mut out = Vec::new();
    let mut r = rng(SEED);
    for i in 0..20 {
        let p = sample(&mut r, false);
        let u = build_u(&algebra, &p);
        out.push((format!("uqsl2 n=2 twist #{i}"), base.twist(&u).expect("twist")));
    }
    for i in 0..3 {
        let p = sample(&mut r, true);
        let u = build_u(&algebra, &p);
        out.push((
            format!("uqsl2 n=2 symmetric twist #{i}"),
            base.twist(&u).expect("twist"),
        ));
    }
    out.push(("uqsl2 n=2 integral form".into(), base));
    out
}

pub fn suite_uqsl2_n2() -> SuiteReport {
    let mut ctx = Ctx::new();
    let algebra = match uqsl2(2) {
        Ok(a) => a,
        Err(e) => {
            let mut c = Ctx::new();
            c.check("build", false, e.to_string());
            return c.finish("uqsl2-n2");
        }
    };
    ctx.check_result(
        "table associativity",
        algebra.validate().map(|_| true),
        "full 8^3 sweep",
    );
    // center = <1, EF, KEF>; [A, A] = <KEF, E, KE, F, KF>
    {
        let z = center(&algebra);
        let span_targets = [idx(0, 0, 0), idx(0, 1, 1), idx(1, 1, 1)];
        let ok_center = z.len() == 3
            && span_targets
                .iter()
                .all(|&t| in_span(&z, &algebra.basis_element(t)));
        ctx.check("center = <1, EF, KEF>", ok_center, format!("dim {}", z.len()));
        let comms = commutator_subspace(&algebra);
        let comm_targets = [
            idx(1, 1, 1),
            idx(0, 0, 1),
            idx(1, 0, 1),
            idx(0, 1, 0),
            idx(1, 1, 0),
        ];
        let ok_comm = comms.len() == 5
            && comm_targets
                .iter()
                .all(|&t| in_span(&comms, &algebra.basis_element(t)));
        ctx.check(
            "[A,A] = <KEF, E, KE, F, KF>",
            ok_comm,
            format!("dim {}", comms.len()),
        );
    }
    let base = match uqsl2_integral_form(2) {
        Ok(b) => b,
        Err(e) => {
            ctx.check("integral form", false, e.to_string());
            return ctx.finish("uqsl2-n2");
        }
    };
    ctx.check(
        "integral form has B = uloll = dim1 = 0",
        base.lollipop().is_zero()
            && base.uloll().iter().all(Scalar::is_zero)
            && base.fdim(1).is_zero(),
        "non-semisimple baseline",
    );
    let mut r = rng(SEED);
    for i in 0..20 {
        let p = sample(&mut r, false);
        check_params(&mut ctx, &format!("generic twist #{i}"), &base, &p);
    }
    for i in 0..3 {
        let p = sample(&mut r, true);
        check_params(&mut ctx, &format!("symmetric twist #{i}"), &base, &p);
    }
    // fixed example u = K + 5 KEF: series 5 + 8x
    {
        let f = algebra.field();
        let p = Params {
            a: Scalar::zero(f),
            b: Scalar::one(f),
            c: Scalar::zero(f),
            d: Scalar::from_int(f, 5),
            alpha: Scalar::zero(f),
            beta: Scalar::zero(f),
            gamma: Scalar::zero(f),
            delta: Scalar::zero(f),
        };
        let u = build_u(&algebra, &p);
        let id = "u = K + 5KEF series";
        match base.twist(&u).and_then(|t| t.rational_closed_form()) {
            Ok(series) => {
                let expected = RationalSeries::new(
                    f,
                    vec![Scalar::from_int(f, 5), Scalar::from_int(f, 8)],
                    vec![Scalar::one(f)],
                );
                ctx.check(id, series.equivalent(&expected), format!("got {series}"));
            }
            Err(e) => ctx.check(id, false, e.to_string()),
        }
    }
    ctx.finish("uqsl2-n2")
}
