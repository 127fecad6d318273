//! The text form of `y^n = f(x)`.
//!
//! ```text
//! equation := "y" "^" INT "=" poly
//! poly     := ["+" | "-"] term (("+" | "-") term)*
//! term     := coef ["*"] "x" ["^" INT] | coef | "x" ["^" INT]
//! coef     := INT ["/" INT]
//! ```
//!
//! Whitespace is ignored between tokens. Repeated exponents are summed.

use std::fmt::Write;

use num_bigint::BigInt;
use superelliptic_core::dihedral::FieldElement;
use superelliptic_core::exact::QuadExtElem;
use superelliptic_core::{Polynomial, Rational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("missing exponent on y; expected `y^N = ...`")]
    MissingExponent,
    #[error("exponent n = {0} must be at least 2")]
    ExponentTooSmall(u64),
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "syntax_error",
            ParseError::MissingExponent => "missing_exponent",
            ParseError::ExponentTooSmall(_) => "exponent_too_small",
        }
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.describe();
            self.err(format!("expected `{}`, found {found}", c as char))
        }
    }

    fn describe(&mut self) -> String {
        match self.peek() {
            Some(c) if c.is_ascii_graphic() => format!("`{}`", c as char),
            Some(_) => "a non-ASCII character".to_string(),
            None => "end of input".to_string(),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            let found = self.describe();
            return self.err(format!("expected a number, found {found}"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("ascii digits"))
    }

    fn small_int(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let v = self.digits()?;
        u64::try_from(v).map_err(|_| ParseError::Syntax {
            pos: start,
            message: "exponent too large".to_string(),
        })
    }

    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let num = self.digits()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.digits()?;
            return Rational::new(num, den).or(Err(ParseError::Syntax {
                pos: at,
                message: "zero denominator".to_string(),
            }));
        }
        Ok(Rational::from_integer(num))
    }

    /// `x [^ INT]` after an optional coefficient; returns the exponent.
    fn x_power(&mut self) -> Result<usize, ParseError> {
        self.expect(b'x')?;
        if self.eat(b'^') {
            let e = self.small_int()?;
            return usize::try_from(e).or_else(|_| self.err("exponent too large"));
        }
        Ok(1)
    }

    fn term(&mut self) -> Result<(usize, Rational), ParseError> {
        match self.peek() {
            Some(b'x') => Ok((self.x_power()?, Rational::one())),
            Some(c) if c.is_ascii_digit() => {
                let c = self.coefficient()?;
                if self.eat(b'*') {
                    return Ok((self.x_power()?, c));
                }
                if self.peek() == Some(b'x') {
                    return Ok((self.x_power()?, c));
                }
                Ok((0, c))
            }
            _ => {
                let found = self.describe();
                self.err(format!("expected a term, found {found}"))
            }
        }
    }
}

/// Parses `y^N = POLY` into `(n, f)`.
pub fn parse_equation(text: &str) -> Result<(u64, Polynomial<Rational>), ParseError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    cur.expect(b'y')?;
    if !cur.eat(b'^') {
        return match cur.peek() {
            Some(b'=') => Err(ParseError::MissingExponent),
            _ => {
                let found = cur.describe();
                cur.err(format!("expected `^`, found {found}"))
            }
        };
    }
    let n = cur.small_int()?;
    cur.expect(b'=')?;
    let f = parse_poly(&mut cur)?;
    if n < 2 {
        return Err(ParseError::ExponentTooSmall(n));
    }
    Ok((n, f))
}

/// Parses a bare polynomial in `x`.
pub fn parse_polynomial(text: &str) -> Result<Polynomial<Rational>, ParseError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    parse_poly(&mut cur)
}

fn parse_poly(cur: &mut Cursor<'_>) -> Result<Polynomial<Rational>, ParseError> {
    let mut terms = Vec::new();
    let mut negative = cur.eat(b'-');
    if !negative {
        cur.eat(b'+');
    }
    loop {
        let (e, c) = cur.term()?;
        terms.push((e, if negative { -c } else { c }));
        if cur.eat(b'+') {
            negative = false;
        } else if cur.eat(b'-') {
            negative = true;
        } else {
            break;
        }
    }
    if cur.peek().is_some() {
        let found = cur.describe();
        return cur.err(format!("unexpected {found} after polynomial"));
    }
    Ok(Polynomial::from_terms(&Rational::zero(), terms))
}

fn monomial(e: usize) -> String {
    match e {
        0 => String::new(),
        1 => "*x".to_string(),
        _ => format!("*x^{e}"),
    }
}

/// Canonical text: descending exponents, explicit coefficients
/// (`1*x^6`), zero terms dropped, `-` folded into the separator.
pub fn render_polynomial(f: &Polynomial<Rational>) -> String {
    let mut out = String::new();
    for (e, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let _ = write!(out, "{mag}{}", monomial(e));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_equation(n: u64, f: &Polynomial<Rational>) -> String {
    format!("y^{n} = {}", render_polynomial(f))
}

fn render_quad(q: &QuadExtElem) -> String {
    if let Some(r) = q.as_rational() {
        return r.to_string();
    }
    let sqrt = format!("sqrt({})", q.d());
    let b = q.b();
    let b_part = if b.abs() == Rational::one() {
        sqrt
    } else {
        format!("{}*{sqrt}", b.abs())
    };
    match (q.a().is_zero(), b.is_negative()) {
        (true, false) => b_part,
        (true, true) => format!("-{b_part}"),
        (false, neg) => format!("({} {} {b_part})", q.a(), if neg { "-" } else { "+" }),
    }
}

/// Renders a model whose coefficients may live in `Q(√d)`; `√d` prints as
/// `sqrt(d)` and irrational coefficients are parenthesized.
pub fn render_field_equation(n: u64, terms: &[(usize, FieldElement)]) -> String {
    let mut sorted: Vec<&(usize, FieldElement)> =
        terms.iter().filter(|(_, c)| !c.is_zero()).collect();
    sorted.sort_by_key(|t| std::cmp::Reverse(t.0));
    let mut out = String::new();
    for (e, c) in sorted {
        let (neg, body) = match c {
            FieldElement::Rational(r) => (r.is_negative(), r.abs().to_string()),
            FieldElement::Quadratic(q) => match q.as_rational() {
                Some(r) => (r.is_negative(), r.abs().to_string()),
                None if q.a().is_zero() && q.b().is_negative() => (true, render_quad(&-q.clone())),
                None => (false, render_quad(q)),
            },
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let _ = write!(out, "{body}{}", monomial(*e));
    }
    if out.is_empty() {
        out.push('0');
    }
    format!("y^{n} = {out}")
}
