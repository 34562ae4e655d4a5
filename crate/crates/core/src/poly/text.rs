//! Canonical text form of polynomials.
//!
//! ```text
//! poly     := term ( (" + " | " - ") term )* | "0"
//! term     := coeff? monomial?         coefficient omitted when 1 and a monomial follows
//! monomial := ["q" ["^" int]] ["*"] ["t" ["^" int]]
//! ```
//!
//! Terms are printed by descending total degree, then descending `q`
//! exponent, e.g. `q^3*t + 2*q^2*t^2 - 3*q^3 - 1`. Laurent exponents print as
//! `q^-2`. A leading negative term is written `-q^2 + ...`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

use super::{Coefficient, LaurentPoly, QtPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParsePolyError {
    #[error("empty polynomial text")]
    Empty,
    #[error("unexpected character {found:?} at byte {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("bad integer {0:?}")]
    BadInteger(String),
    #[error("negative exponent in a polynomial: {0}")]
    NegativeExponent(i64),
    #[error("variable t is not allowed in a Laurent polynomial in q")]
    UnexpectedT,
}

fn write_var(out: &mut String, var: char, e: i64) {
    if e == 0 {
        return;
    }
    if !out.is_empty() {
        out.push('*');
    }
    out.push(var);
    if e != 1 {
        let _ = write!(out, "^{e}");
    }
}

fn write_terms<C: Coefficient>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, i64, C)>,
) -> fmt::Result {
    let mut first = true;
    for (eq, et, c) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        first = false;
        let mut mono = String::new();
        write_var(&mut mono, 'q', eq);
        write_var(&mut mono, 't', et);
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{mag}*{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl<C: Coefficient> fmt::Display for QtPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.canonical_terms()
                .into_iter()
                .map(|((a, b), c)| (a as i64, b as i64, c.clone())),
        )
    }
}

impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.canonical_terms().into_iter().map(|(e, c)| (e, 0, c.clone())),
        )
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c == ' ') {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self) -> ParsePolyError {
        match self.peek() {
            Some(found) => ParsePolyError::Unexpected { pos: self.pos, found },
            None => ParsePolyError::UnexpectedEnd,
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn exponent(&mut self) -> Result<i64, ParsePolyError> {
        if !self.eat('^') {
            return Ok(1);
        }
        let neg = self.eat('-');
        let d = self.digits();
        if d.is_empty() {
            return Err(self.unexpected());
        }
        let v: i64 = d.parse().map_err(|_| ParsePolyError::BadInteger(d.to_string()))?;
        Ok(if neg { -v } else { v })
    }

    /// Parses one unsigned term into `(coefficient, e_q, e_t)`.
    fn term<C: Coefficient>(&mut self) -> Result<(C, i64, i64), ParsePolyError> {
        let d = self.digits();
        let has_coeff = !d.is_empty();
        let coeff = if has_coeff {
            C::from_str_radix(d, 10).map_err(|_| ParsePolyError::BadInteger(d.to_string()))?
        } else {
            C::one()
        };
        if has_coeff && !self.eat('*') {
            return Ok((coeff, 0, 0));
        }
        let (mut eq, mut et) = (0, 0);
        let mut any = false;
        if self.eat('q') {
            eq = self.exponent()?;
            any = true;
            if self.peek() == Some('*') && self.src[self.pos + 1..].starts_with('t') {
                self.pos += 1;
            }
        }
        if self.eat('t') {
            et = self.exponent()?;
            any = true;
        }
        if !any {
            return Err(self.unexpected());
        }
        Ok((coeff, eq, et))
    }

    fn poly<C: Coefficient>(&mut self) -> Result<Vec<(C, i64, i64)>, ParsePolyError> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(ParsePolyError::Empty);
        }
        let mut out = Vec::new();
        let mut negative = self.eat('-');
        loop {
            self.skip_ws();
            let (c, eq, et) = self.term::<C>()?;
            out.push((if negative { -c } else { c }, eq, et));
            self.skip_ws();
            match self.bump() {
                None => break,
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(found) => {
                    return Err(ParsePolyError::Unexpected { pos: self.pos - found.len_utf8(), found })
                }
            }
        }
        Ok(out)
    }
}

impl<C: Coefficient> FromStr for QtPoly<C> {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lx = Lexer { src: s.trim_end(), pos: 0 };
        let mut p = QtPoly::zero();
        for (c, eq, et) in lx.poly::<C>()? {
            for e in [eq, et] {
                if e < 0 {
                    return Err(ParsePolyError::NegativeExponent(e));
                }
            }
            p.add_term((eq as u32, et as u32), c);
        }
        Ok(p)
    }
}

impl<C: Coefficient> FromStr for LaurentPoly<C> {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lx = Lexer { src: s.trim_end(), pos: 0 };
        let mut p = LaurentPoly::zero();
        for (c, eq, et) in lx.poly::<C>()? {
            if et != 0 {
                return Err(ParsePolyError::UnexpectedT);
            }
            p.add_term(eq, c);
        }
        Ok(p)
    }
}
