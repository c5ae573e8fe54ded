//! Rational generating functions P(x)/Q(x) with exact coefficients.

use std::fmt;

use crate::scalar::{FieldSpec, Scalar};

// --- dense polynomials over Scalar, ascending coefficients ---

pub(crate) fn ptrim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.len() > 1 && p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn pmul(a: &[Scalar], b: &[Scalar], field: FieldSpec) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(field); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

fn pdeg(p: &[Scalar]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn pdivrem(a: &[Scalar], b: &[Scalar], field: FieldSpec) -> (Vec<Scalar>, Vec<Scalar>) {
    let db = pdeg(b).expect("polynomial division by zero");
    let lead_inv = b[db].inv().expect("nonzero lead");
    let mut rem = a.to_vec();
    let mut quot = vec![Scalar::zero(field); a.len().saturating_sub(db)];
    while let Some(da) = pdeg(&rem) {
        if da < db {
            break;
        }
        let factor = &rem[da] * &lead_inv;
        let shift = da - db;
        for i in 0..=db {
            rem[shift + i] = &rem[shift + i] - &(&factor * &b[i]);
        }
        quot[shift] = factor;
    }
    (ptrim(quot), ptrim(rem))
}

/// Monic gcd by the Euclidean algorithm.
fn pgcd(a: &[Scalar], b: &[Scalar], field: FieldSpec) -> Vec<Scalar> {
    let mut r0 = ptrim(a.to_vec());
    let mut r1 = ptrim(b.to_vec());
    while pdeg(&r1).is_some() {
        let (_, r) = pdivrem(&r0, &r1, field);
        r0 = std::mem::replace(&mut r1, r);
    }
    match pdeg(&r0) {
        None => r0,
        Some(d) => {
            let inv = r0[d].inv().expect("nonzero lead");
            r0.iter().map(|c| c * &inv).collect()
        }
    }
}

fn poly_to_string(p: &[Scalar]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let xs = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        let cs = c.to_string();
        let term = if k == 0 {
            cs
        } else if c.is_one() {
            xs
        } else if cs.starts_with('-') || cs.contains(' ') || cs.starts_with('[') {
            format!("({cs}){xs}")
        } else {
            format!("{cs}{xs}")
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// An exact rational function, reduced, with denominator constant term 1.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalSeries {
    field: FieldSpec,
    numerator: Vec<Scalar>,
    denominator: Vec<Scalar>,
}

impl RationalSeries {
    /// Normalizing constructor: gcd-reduces and rescales so that Q(0) = 1.
    /// Panics if Q(0) = 0 after reduction (the input is not a power series).
    pub fn new(field: FieldSpec, numerator: Vec<Scalar>, denominator: Vec<Scalar>) -> Self {
        let num = ptrim(numerator);
        let den = ptrim(denominator);
        assert!(pdeg(&den).is_some(), "zero denominator");
        let g = pgcd(&num, &den, field);
        let (num, den) = if pdeg(&g) > Some(0) {
            let (qn, rn) = pdivrem(&num, &g, field);
            let (qd, rd) = pdivrem(&den, &g, field);
            debug_assert!(pdeg(&rn).is_none() && pdeg(&rd).is_none());
            (qn, qd)
        } else {
            (num, den)
        };
        let c0 = den[0].inv().expect("denominator constant term must be nonzero");
        RationalSeries {
            field,
            numerator: num.iter().map(|c| c * &c0).collect(),
            denominator: den.iter().map(|c| c * &c0).collect(),
        }
    }

    pub fn constant(field: FieldSpec, value: Scalar) -> Self {
        RationalSeries::new(field, vec![value], vec![Scalar::one(field)])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn numerator(&self) -> &[Scalar] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[Scalar] {
        &self.denominator
    }

    /// First `terms` power-series coefficients of P/Q.
    pub fn expand(&self, terms: usize) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(terms);
        for j in 0..terms {
            // c_j = (P_j - sum_{i=1}^{j} Q_i c_{j-i}) / Q_0, with Q_0 = 1.
            let mut acc = self
                .numerator
                .get(j)
                .cloned()
                .unwrap_or_else(|| Scalar::zero(self.field));
            for i in 1..=j.min(self.denominator.len() - 1) {
                let prev: &Scalar = &out[j - i];
                acc = &acc - &(&self.denominator[i] * prev);
            }
            out.push(acc);
        }
        out
    }

    /// Equality as rational functions (cross multiplication).
    pub fn equivalent(&self, other: &RationalSeries) -> bool {
        let lhs = pmul(&self.numerator, &other.denominator, self.field);
        let rhs = pmul(&other.numerator, &self.denominator, self.field);
        ptrim(lhs) == ptrim(rhs)
    }

    pub fn add(&self, other: &RationalSeries) -> RationalSeries {
        let num_a = pmul(&self.numerator, &other.denominator, self.field);
        let num_b = pmul(&other.numerator, &self.denominator, self.field);
        let mut num = vec![Scalar::zero(self.field); num_a.len().max(num_b.len())];
        for (i, c) in num_a.iter().enumerate() {
            num[i] = &num[i] + c;
        }
        for (i, c) in num_b.iter().enumerate() {
            num[i] = &num[i] + c;
        }
        let den = pmul(&self.denominator, &other.denominator, self.field);
        RationalSeries::new(self.field, num, den)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.iter().all(Scalar::is_zero)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if pdeg(&self.denominator) == Some(0) {
            write!(f, "{}", poly_to_string(&self.numerator))
        } else {
            write!(
                f,
                "({})/({})",
                poly_to_string(&self.numerator),
                poly_to_string(&self.denominator)
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(n: i64) -> Scalar {
        Scalar::from_int(FieldSpec::Rational, n)
    }

    fn qq(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(FieldSpec::Rational, n, d)
    }

    #[test]
    fn geometric_expansion() {
        let f = FieldSpec::Rational;
        // 2/(1-2x) expands to 2, 4, 8, 16
        let s = RationalSeries::new(f, vec![qi(2)], vec![qi(1), qi(-2)]);
        assert_eq!(s.expand(4), vec![qi(2), qi(4), qi(8), qi(16)]);
    }

    #[test]
    fn reduction_and_equivalence() {
        let f = FieldSpec::Rational;
        // (2 - 4x)/(1 - 4x^2) reduces to 2/(1 + 2x)
        let a = RationalSeries::new(f, vec![qi(2), qi(-4)], vec![qi(1), qi(0), qi(-4)]);
        let b = RationalSeries::new(f, vec![qi(2)], vec![qi(1), qi(2)]);
        assert_eq!(a, b);
        assert!(a.equivalent(&b));
        // denominator normalized to constant term 1
        let c = RationalSeries::new(f, vec![qi(4)], vec![qi(2), qi(2)]);
        assert_eq!(c.denominator()[0], qi(1));
        assert_eq!(c.numerator(), &[qi(2)]);
    }

    #[test]
    fn addition_of_partial_fractions() {
        let f = FieldSpec::Rational;
        // 1/(1-x) + 1/(1+x) = 2/(1-x^2)
        let a = RationalSeries::new(f, vec![qi(1)], vec![qi(1), qi(-1)]);
        let b = RationalSeries::new(f, vec![qi(1)], vec![qi(1), qi(1)]);
        let sum = a.add(&b);
        let expected = RationalSeries::new(f, vec![qi(2)], vec![qi(1), qi(0), qi(-1)]);
        assert!(sum.equivalent(&expected));
    }

    #[test]
    fn display_forms() {
        let f = FieldSpec::Rational;
        let s = RationalSeries::new(f, vec![qi(3)], vec![qi(1), qq(-3, 2)]);
        assert_eq!(s.to_string(), "(3)/(1 + (-3/2)x)");
        let p = RationalSeries::new(f, vec![qi(5), qi(8)], vec![qi(1)]);
        assert_eq!(p.to_string(), "5 + 8x");
    }
}
