//! A tiny expression grammar for twist elements: identifiers bound to algebra
//! elements, scalar literals, + - * ^ and parentheses, with juxtaposition as
//! multiplication (so "1 - 3/2 F^2 E^2" parses as 1 - (3/2) F^2 E^2).

use std::collections::BTreeMap;
use std::sync::Arc;

use super::BuilderError;
use crate::algebra::{element_inverse, multiply, Algebra, Element};
use crate::scalar::{FieldSpec, Scalar};

/// Identifier bindings for [`parse_element`].
#[derive(Debug, Clone)]
pub struct WordContext {
    algebra: Arc<Algebra>,
    atoms: BTreeMap<String, Element>,
}

impl WordContext {
    pub fn new(algebra: Arc<Algebra>, atoms: Vec<(String, Element)>) -> Self {
        WordContext {
            algebra,
            atoms: atoms.into_iter().collect(),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    fn field(&self) -> FieldSpec {
        self.algebra.field()
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    ctx: &'a WordContext,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> BuilderError {
        BuilderError::Word {
            pos: self.pos,
            msg: msg.into(),
        }
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

    fn expr(&mut self) -> Result<Element, BuilderError> {
        self.skip_ws();
        let mut negate = false;
        if self.peek() == Some('-') {
            self.bump();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.scale(&Scalar::from_int(self.ctx.field(), -1));
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Some('-') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Element, BuilderError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = multiply(&acc, &rhs)?;
                }
                // juxtaposition: a factor can start right here
                Some(c) if c.is_ascii_digit() || c.is_alphabetic() || c == '(' || c == '[' => {
                    let rhs = self.factor()?;
                    acc = multiply(&acc, &rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Element, BuilderError> {
        let base = self.primary()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        self.skip_ws();
        let mut negative = false;
        if self.peek() == Some('-') {
            self.bump();
            negative = true;
        }
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.err("expected exponent digits"));
        }
        let exp: u32 = self.text[start..self.pos]
            .parse()
            .map_err(|_| self.err("exponent too large"))?;
        if negative {
            let inv = element_inverse(&base).map_err(|_| self.err("base is not invertible"))?;
            Ok(inv.pow(exp))
        } else {
            Ok(base.pow(exp))
        }
    }

    fn primary(&mut self) -> Result<Element, BuilderError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == '[' => {
                let scalar = self.scalar_literal()?;
                Ok(self.ctx.algebra.unit_element().scale(&scalar))
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
                    self.bump();
                }
                let name = &self.text[start..self.pos];
                self.ctx
                    .atoms
                    .get(name)
                    .cloned()
                    .ok_or_else(|| self.err(format!("unknown identifier '{name}'")))
            }
            _ => Err(self.err("expected scalar, identifier or '('")),
        }
    }

    /// A rational like 3/2, or a bracketed cyclotomic literal.
    fn scalar_literal(&mut self) -> Result<Scalar, BuilderError> {
        let field = self.ctx.field();
        if self.peek() == Some('[') {
            let start = self.pos;
            while let Some(c) = self.bump() {
                if c == ']' {
                    let text = &self.text[start..self.pos];
                    return crate::scalar::parse_scalar(text, field).map_err(|e| BuilderError::Word {
                        pos: start,
                        msg: e.to_string(),
                    });
                }
            }
            return Err(self.err("unterminated '['"));
        }
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let num_end = self.pos;
        let mut den: Option<(usize, usize)> = None;
        if self.peek() == Some('/') {
            self.bump();
            let den_start = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.bump();
            }
            if self.pos == den_start {
                return Err(self.err("expected denominator digits"));
            }
            den = Some((den_start, self.pos));
        }
        let numer: i64 = self.text[start..num_end]
            .parse()
            .map_err(|_| self.err("numerator too large"))?;
        let denom: i64 = match den {
            None => 1,
            Some((a, b)) => self.text[a..b]
                .parse()
                .map_err(|_| self.err("denominator too large"))?,
        };
        if denom == 0 {
            return Err(self.err("zero denominator"));
        }
        Ok(Scalar::from_ratio(field, numer, denom))
    }
}

/// Parses an element expression against the context's identifier bindings.
pub fn parse_element(text: &str, ctx: &WordContext) -> Result<Element, BuilderError> {
    let mut p = Parser { text, pos: 0, ctx };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.err("trailing input"));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::super::uqsl2::{pbw_index, uqsl2, uqsl2_word_context};
    use super::*;

    #[test]
    fn words_on_uqsl2() {
        let alg = uqsl2(3).unwrap();
        let ctx = uqsl2_word_context(&alg).unwrap();
        let field = alg.field();
        let k = alg.basis_element(pbw_index(3, 1, 0, 0));
        assert_eq!(parse_element("K", &ctx).unwrap(), k);
        // juxtaposition and powers
        let x = parse_element("K*(1 - 3/2 F^2 E^2)", &ctx).unwrap();
        let f2e2 = alg.basis_element(pbw_index(3, 0, 2, 2));
        let expected = &k - &multiply(&k, &f2e2).unwrap().scale(&Scalar::from_ratio(field, 3, 2));
        assert_eq!(x, expected);
        // K^-1 = K^2
        assert_eq!(
            parse_element("K^-1", &ctx).unwrap(),
            alg.basis_element(pbw_index(3, 2, 0, 0))
        );
        assert!(parse_element("Q", &ctx).is_err());
        assert!(parse_element("K +", &ctx).is_err());
    }
}
