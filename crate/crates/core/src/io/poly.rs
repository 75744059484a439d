//! Polynomial expressions: signed terms `[coeff][*]monomial`, monomials are
//! `var[^exp]` joined by `*`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{Coeff, Monomial, Polynomial, Ring};

/// A parsed term with the column where it starts.
pub(crate) struct Term {
    pub col: usize,
    pub text: String,
    pub mono: Monomial,
    pub coeff: Coeff,
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    offset: usize,
    names: &'a [String],
}

impl Cursor<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { line: self.line, col: self.offset + self.pos + 1, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn ident(&mut self) -> Option<String> {
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c.is_alphabetic() || c == '_') {
            return None;
        }
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().collect())
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        self.skip_ws();
        let at = self.pos;
        let name = self.ident().ok_or_else(|| self.err("expected a variable"))?;
        let Some(i) = self.names.iter().position(|n| *n == name) else {
            self.pos = at;
            return Err(self.err(format!("unknown variable {name:?}")));
        };
        self.skip_ws();
        let mut k = 1u32;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let d = self.digits().ok_or_else(|| self.err("expected an exponent after '^'"))?;
            k = d.parse().map_err(|_| self.err("exponent too large"))?;
        }
        exps[i] = exps[i].checked_add(k).ok_or(Error::ExponentOverflow)?;
        Ok(())
    }

    /// A term after its sign.
    fn term(&mut self, ring: Ring, negative: bool) -> Result<(Monomial, Coeff)> {
        self.skip_ws();
        let mut exps = vec![0u32; ring.nvars];
        let mut value = BigRational::from_integer(BigInt::from(1));
        let mut need_mono = true;
        if let Some(num) = self.digits() {
            let mut q = BigRational::from_integer(num.parse().unwrap());
            self.skip_ws();
            if self.peek() == Some('/') {
                self.pos += 1;
                self.skip_ws();
                let den: BigInt = self.digits().ok_or_else(|| self.err("expected a denominator"))?.parse().unwrap();
                if den.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                q = BigRational::new(q.to_integer(), den);
            }
            value = q;
            self.skip_ws();
            match self.peek() {
                Some('*') => self.pos += 1,
                Some(c) if c.is_alphabetic() || c == '_' => {}
                _ => need_mono = false,
            }
        }
        if need_mono {
            self.factor(&mut exps)?;
            loop {
                self.skip_ws();
                match self.peek() {
                    Some('*') => {
                        self.pos += 1;
                        self.factor(&mut exps)?;
                    }
                    Some(c) if c.is_alphanumeric() || c == '_' => {
                        return Err(self.err("expected '*' between factors"));
                    }
                    _ => break,
                }
            }
        }
        if negative {
            value = -value;
        }
        Ok((Monomial::new(exps), ring.field.from_rational(&value).map_err(|e| self.err(e.to_string()))?))
    }
}

/// Parses one expression; `line` and `offset` place it in the source for
/// error positions.
pub(crate) fn parse_terms(src: &str, ring: Ring, names: &[String], line: usize, offset: usize) -> Result<Vec<Term>> {
    let mut c = Cursor { chars: src.chars().collect(), pos: 0, line, offset, names };
    let mut out = Vec::new();
    c.skip_ws();
    if c.peek().is_none() {
        return Err(c.err("empty expression"));
    }
    let mut first = true;
    loop {
        c.skip_ws();
        let start = c.pos;
        let negative = match c.peek() {
            Some('+') => {
                c.pos += 1;
                false
            }
            Some('-') => {
                c.pos += 1;
                true
            }
            None => break,
            Some(_) if first => false,
            Some(ch) => return Err(c.err(format!("unexpected {ch:?}"))),
        };
        first = false;
        let (mono, coeff) = c.term(ring, negative)?;
        let text: String = c.chars[start..c.pos].iter().collect();
        out.push(Term { col: offset + start + 1, text: text.trim().to_string(), mono, coeff });
    }
    Ok(out)
}

/// Parses `src` as a polynomial in the given variables.
pub fn parse_polynomial(src: &str, ring: Ring, names: &[String]) -> Result<Polynomial> {
    let terms = parse_terms(src, ring, names, 1, 0)?;
    Polynomial::from_terms(ring, terms.into_iter().map(|t| (t.mono, t.coeff)))
}
