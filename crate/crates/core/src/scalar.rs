//! Exact scalars: rational numbers and elements of cyclotomic fields Q(zeta_n).
//!
//! A [`Scalar`] is a vector of rationals: length 1 over Q, length deg(Phi_n)
//! over Q(zeta_n), where Phi_n is the n-th cyclotomic polynomial. Elements are
//! kept fully reduced mod Phi_n, so equality is coefficient-wise and every
//! value has exactly one representation.

use std::fmt;
use std::sync::OnceLock;

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

/// Largest cyclotomic order the recursive Phi_n construction is built for.
pub const MAX_CYCLOTOMIC_ORDER: u32 = 12;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order {0} not supported (need 2..={MAX_CYCLOTOMIC_ORDER})")]
    UnsupportedOrder(u32),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// The ground field: Q, or the cyclotomic extension Q(zeta_n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Cyclotomic { order: u32 },
}

impl FieldSpec {
    pub fn rational() -> Self {
        FieldSpec::Rational
    }

    pub fn cyclotomic(order: u32) -> Result<Self, ScalarError> {
        if !(2..=MAX_CYCLOTOMIC_ORDER).contains(&order) {
            return Err(ScalarError::UnsupportedOrder(order));
        }
        Ok(FieldSpec::Cyclotomic { order })
    }

    /// Degree of the field over Q: 1, or deg Phi_n = phi(n).
    pub fn degree(&self) -> usize {
        match self {
            FieldSpec::Rational => 1,
            FieldSpec::Cyclotomic { order } => cyclotomic_poly(*order).len() - 1,
        }
    }

    pub fn order(&self) -> Option<u32> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Cyclotomic { order } => Some(*order),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Cyclotomic { order } => write!(f, "Q(zeta_{order})"),
        }
    }
}

/// An exact field element, canonical by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    field: FieldSpec,
    /// Coefficients of 1, zeta, ..., zeta^{deg-1}; always exactly `degree` long.
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        Scalar {
            field,
            coeffs: vec![BigRational::zero(); field.degree()],
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        let mut s = Scalar::zero(field);
        s.coeffs[0] = BigRational::one();
        s
    }

    pub fn from_int(field: FieldSpec, value: i64) -> Self {
        let mut s = Scalar::zero(field);
        s.coeffs[0] = BigRational::from_integer(BigInt::from(value));
        s
    }

    /// num/den as an element of `field` (embedded in the constant coefficient).
    pub fn from_ratio(field: FieldSpec, num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let mut s = Scalar::zero(field);
        s.coeffs[0] = BigRational::new(BigInt::from(num), BigInt::from(den));
        s
    }

    pub fn from_rational(field: FieldSpec, value: BigRational) -> Self {
        let mut s = Scalar::zero(field);
        s.coeffs[0] = value;
        s
    }

    /// Builds a cyclotomic element from raw zeta-coefficients, reducing mod Phi_n.
    /// Shorter vectors are zero-padded; longer ones are reduced.
    pub fn from_coeffs(field: FieldSpec, coeffs: Vec<BigRational>) -> Self {
        match field {
            FieldSpec::Rational => {
                assert!(coeffs.len() <= 1, "rational scalar takes one coefficient");
                let c = coeffs.into_iter().next().unwrap_or_else(BigRational::zero);
                Scalar {
                    field,
                    coeffs: vec![c],
                }
            }
            FieldSpec::Cyclotomic { order } => {
                let phi = cyclotomic_poly(order);
                let reduced = poly_rem(&coeffs, phi);
                let mut out = reduced;
                out.resize(field.degree(), BigRational::zero());
                Scalar { field, coeffs: out }
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a plain rational, if it has no zeta part.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_same_field(&self, rhs: &Scalar) -> Result<(), ScalarError> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch)
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same_field(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Scalar {
            field: self.field,
            coeffs,
        })
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same_field(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Scalar {
            field: self.field,
            coeffs,
        })
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same_field(rhs)?;
        match self.field {
            FieldSpec::Rational => Ok(Scalar {
                field: self.field,
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            }),
            FieldSpec::Cyclotomic { order } => {
                let prod = poly_mul(&self.coeffs, &rhs.coeffs);
                let mut out = poly_rem(&prod, cyclotomic_poly(order));
                out.resize(self.field.degree(), BigRational::zero());
                Ok(Scalar {
                    field: self.field,
                    coeffs: out,
                })
            }
        }
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiplicative inverse; extended Euclid in Q[x] mod Phi_n for cyclotomics.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match self.field {
            FieldSpec::Rational => Ok(Scalar {
                field: self.field,
                coeffs: vec![self.coeffs[0].recip()],
            }),
            FieldSpec::Cyclotomic { order } => {
                let phi = cyclotomic_poly(order);
                let (g, s, _) = poly_egcd(&self.coeffs, phi);
                // Phi_n is irreducible, so gcd(a, Phi_n) is a nonzero constant.
                debug_assert_eq!(poly_deg(&g), Some(0));
                let scale = g[0].recip();
                let inv = s.iter().map(|c| c * &scale).collect::<Vec<_>>();
                let mut out = poly_rem(&inv, phi);
                out.resize(self.field.degree(), BigRational::zero());
                Ok(Scalar {
                    field: self.field,
                    coeffs: out,
                })
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same_field(rhs)?;
        self.checked_mul(&rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one(self.field);
        for _ in 0..exp {
            acc = acc.checked_mul(self).expect("same field");
        }
        acc
    }

    pub fn powi(&self, exp: i64) -> Result<Scalar, ScalarError> {
        if exp >= 0 {
            Ok(self.pow(exp as u32))
        } else {
            Ok(self.inv()?.pow((-exp) as u32))
        }
    }
}

/// zeta^power in Q(zeta_n), reduced to canonical form.
pub fn root_of_unity(field: FieldSpec, power: i64) -> Result<Scalar, ScalarError> {
    let order = match field {
        FieldSpec::Cyclotomic { order } => order,
        FieldSpec::Rational => return Err(ScalarError::UnsupportedOrder(1)),
    };
    let k = power.rem_euclid(order as i64) as usize;
    let mut raw = vec![BigRational::zero(); k + 1];
    raw[k] = BigRational::one();
    Ok(Scalar::from_coeffs(field, raw))
}

// --- arithmetic operators (panic on field mismatch; use checked_* to handle it) ---

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar field mismatch")
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar field mismatch")
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar field mismatch")
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.checked_add(rhs).expect("scalar field mismatch");
    }
}

// --- formatting ---

fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field {
            FieldSpec::Rational => write!(f, "{}", format_rational(&self.coeffs[0])),
            FieldSpec::Cyclotomic { .. } => {
                let inner = self
                    .coeffs
                    .iter()
                    .map(format_rational)
                    .collect::<Vec<_>>()
                    .join(", ");
                write!(f, "[{inner}]")
            }
        }
    }
}

pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

// --- parsing ---

pub(crate) struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn err(&self, msg: impl Into<String>) -> ScalarError {
        ScalarError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }
}

fn parse_rational_at(cur: &mut Cursor) -> Result<BigRational, ScalarError> {
    cur.skip_ws();
    let mut neg = false;
    match cur.peek() {
        // U+2212 is accepted alongside the ASCII minus.
        Some('-') | Some('\u{2212}') => {
            cur.bump();
            neg = true;
        }
        Some('+') => {
            cur.bump();
        }
        _ => {}
    }
    cur.skip_ws();
    let digits_start = cur.pos;
    while matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
        cur.bump();
    }
    if cur.pos == digits_start {
        return Err(cur.err("expected digits"));
    }
    let numer: BigInt = cur.text[digits_start..cur.pos].parse().unwrap();
    let mut denom = BigInt::one();
    if cur.peek() == Some('/') {
        cur.bump();
        let den_start = cur.pos;
        while matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            cur.bump();
        }
        if cur.pos == den_start {
            return Err(cur.err("expected denominator digits"));
        }
        denom = cur.text[den_start..cur.pos].parse().unwrap();
        if denom.is_zero() {
            return Err(cur.err("zero denominator"));
        }
    }
    let q = BigRational::new(numer, denom);
    Ok(if neg { -q } else { q })
}

/// Parses the scalar grammar: a rational over Q, or `[q0, q1, ...]` over
/// Q(zeta_n) with coefficients of 1, zeta, ... (shorter lists zero-padded).
pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<Scalar, ScalarError> {
    let mut cur = Cursor::new(text);
    let value = parse_scalar_at(&mut cur, field)?;
    cur.skip_ws();
    if cur.pos != text.len() {
        return Err(cur.err("trailing input"));
    }
    Ok(value)
}

pub(crate) fn parse_scalar_at(cur: &mut Cursor, field: FieldSpec) -> Result<Scalar, ScalarError> {
    cur.skip_ws();
    match field {
        FieldSpec::Rational => Ok(Scalar::from_rational(field, parse_rational_at(cur)?)),
        FieldSpec::Cyclotomic { .. } => {
            if cur.peek() != Some('[') {
                return Err(cur.err("expected '[' starting cyclotomic scalar"));
            }
            cur.bump();
            let mut coeffs = Vec::new();
            loop {
                coeffs.push(parse_rational_at(cur)?);
                cur.skip_ws();
                match cur.peek() {
                    Some(',') => {
                        cur.bump();
                    }
                    Some(']') => {
                        cur.bump();
                        break;
                    }
                    _ => return Err(cur.err("expected ',' or ']'")),
                }
            }
            if coeffs.len() > field.degree() {
                return Err(cur.err(format!(
                    "too many coefficients: field degree is {}",
                    field.degree()
                )));
            }
            Ok(Scalar::from_coeffs(field, coeffs))
        }
    }
}

// --- dense polynomial helpers over BigRational (ascending coefficients) ---

fn poly_deg(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    let len = poly_deg(&p).map_or(0, |d| d + 1);
    p.truncate(len);
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Remainder of a modulo b (b nonzero).
fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    poly_divrem(a, b).1
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let lead_inv = b[db].recip();
    let mut rem: Vec<BigRational> = a.to_vec();
    let mut quot = vec![BigRational::zero(); a.len().saturating_sub(db)];
    while let Some(da) = poly_deg(&rem) {
        if da < db {
            break;
        }
        let factor = &rem[da] * &lead_inv;
        let shift = da - db;
        for (i, bi) in b.iter().enumerate().take(db + 1) {
            let delta = &factor * bi;
            rem[shift + i] -= delta;
        }
        quot[shift] = factor;
    }
    (poly_trim(quot), poly_trim(rem))
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g.
fn poly_egcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    let one = vec![BigRational::one()];
    let zero: Vec<BigRational> = Vec::new();
    let mut r0 = poly_trim(a.to_vec());
    let mut r1 = poly_trim(b.to_vec());
    let (mut s0, mut s1) = (one.clone(), zero.clone());
    let (mut t0, mut t1) = (zero, one);
    while poly_deg(&r1).is_some() {
        let (q, r) = poly_divrem(&r0, &r1);
        let next_s = poly_sub(&s0, &poly_mul(&q, &s1));
        let next_t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, next_s);
        t0 = std::mem::replace(&mut t1, next_t);
    }
    (r0, s0, t0)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    poly_trim(out)
}

/// Phi_n for 1 <= n <= MAX_CYCLOTOMIC_ORDER, ascending coefficients,
/// computed as (x^n - 1) / prod_{d | n, d < n} Phi_d.
fn cyclotomic_poly(order: u32) -> &'static [BigRational] {
    static TABLE: OnceLock<Vec<Vec<BigRational>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let max = MAX_CYCLOTOMIC_ORDER as usize;
        let mut polys: Vec<Vec<BigRational>> = vec![Vec::new(); max + 1];
        for n in 1..=max {
            let mut xn_minus_1 = vec![BigRational::zero(); n + 1];
            xn_minus_1[0] = -BigRational::one();
            xn_minus_1[n] = BigRational::one();
            let mut divisor = vec![BigRational::one()];
            for d in 1..n {
                if n % d == 0 {
                    divisor = poly_mul(&divisor, &polys[d]);
                }
            }
            let (q, r) = poly_divrem(&xn_minus_1, &divisor);
            assert!(poly_deg(&r).is_none(), "Phi_{n} division not exact");
            polys[n] = q;
        }
        polys
    });
    &table[order as usize]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3() -> FieldSpec {
        FieldSpec::cyclotomic(3).unwrap()
    }

    #[test]
    fn rational_add() {
        let f = FieldSpec::Rational;
        let a = Scalar::from_ratio(f, 1, 2);
        let b = Scalar::from_ratio(f, 1, 3);
        assert_eq!(&a + &b, Scalar::from_ratio(f, 5, 6));
    }

    #[test]
    fn zeta_squared_reduces() {
        // In Q(zeta_3): zeta * zeta = -1 - zeta since zeta^2 + zeta + 1 = 0.
        let z = root_of_unity(q3(), 1).unwrap();
        let z2 = &z * &z;
        let expected = Scalar::from_coeffs(
            q3(),
            vec![
                BigRational::from_integer((-1).into()),
                BigRational::from_integer((-1).into()),
            ],
        );
        assert_eq!(z2, expected);
    }

    #[test]
    fn inverse_of_two_plus_zeta() {
        // inv(2 + zeta) = (1 - zeta)/3; oracle: multiply back and reduce.
        let z = root_of_unity(q3(), 1).unwrap();
        let a = &Scalar::from_int(q3(), 2) + &z;
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        let expected = Scalar::from_coeffs(
            q3(),
            vec![BigRational::new(1.into(), 3.into()), BigRational::new((-1).into(), 3.into())],
        );
        assert_eq!(inv, expected);
    }

    #[test]
    fn roots_of_unity() {
        assert!(root_of_unity(q3(), 0).unwrap().is_one());
        let z2 = root_of_unity(q3(), 2).unwrap();
        assert_eq!(
            z2,
            Scalar::from_coeffs(
                q3(),
                vec![
                    BigRational::from_integer((-1).into()),
                    BigRational::from_integer((-1).into())
                ]
            )
        );
        // zeta_2 = -1, and Q(zeta_2) has degree 1.
        let f2 = FieldSpec::cyclotomic(2).unwrap();
        assert_eq!(f2.degree(), 1);
        assert_eq!(root_of_unity(f2, 1).unwrap(), Scalar::from_int(f2, -1));
        // Exact multiplicative order n.
        for n in [2u32, 3, 4, 5, 8, 12] {
            let f = FieldSpec::cyclotomic(n).unwrap();
            let z = root_of_unity(f, 1).unwrap();
            let mut p = Scalar::one(f);
            for k in 1..n {
                p = &p * &z;
                assert!(!p.is_one(), "zeta_{n}^{k} = 1 too early");
            }
            p = &p * &z;
            assert!(p.is_one());
        }
    }

    #[test]
    fn parse_and_format() {
        let f = FieldSpec::Rational;
        assert_eq!(parse_scalar("-3/2", f).unwrap(), Scalar::from_ratio(f, -3, 2));
        // U+2212 minus also accepted.
        assert_eq!(
            parse_scalar("\u{2212}3/2", f).unwrap(),
            Scalar::from_ratio(f, -3, 2)
        );
        let z = parse_scalar("[0, 1]", q3()).unwrap();
        assert_eq!(z, root_of_unity(q3(), 1).unwrap());
        let s = parse_scalar("[1/2, -1/3]", q3()).unwrap();
        assert_eq!(format_scalar(&s), "[1/2, -1/3]");
        assert_eq!(parse_scalar(&format_scalar(&s), q3()).unwrap(), s);
        assert!(parse_scalar("1/0", f).is_err());
        assert!(parse_scalar("[1,2,3]", q3()).is_err());
        assert!(parse_scalar("2 junk", f).is_err());
    }

    #[test]
    fn division_errors() {
        let f = FieldSpec::Rational;
        assert_eq!(
            Scalar::one(f).div(&Scalar::zero(f)),
            Err(ScalarError::DivisionByZero)
        );
        let g = q3();
        assert_eq!(
            Scalar::one(f).checked_add(&Scalar::one(g)),
            Err(ScalarError::FieldMismatch)
        );
    }

    #[test]
    fn phi_table_sane() {
        // Phi_12 = x^4 - x^2 + 1, so degree 4.
        assert_eq!(FieldSpec::cyclotomic(12).unwrap().degree(), 4);
        assert_eq!(FieldSpec::cyclotomic(5).unwrap().degree(), 4);
        assert_eq!(FieldSpec::cyclotomic(6).unwrap().degree(), 2);
    }
}
