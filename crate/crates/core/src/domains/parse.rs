//! Recursive-descent parser for polynomials in `z` over a coefficient domain.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 'x' | 'y' | 'z' | '(' expr ')'
//! ```
//!
//! Multiplication must be explicit. Division is allowed by any nonzero
//! `z`-free expression, which covers rational literals such as `3/4`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use super::poly::Poly;
use super::render::Render;
use super::ring::{Field, Ring};

const MAX_EXPONENT: u32 = 4096;

/// A coefficient field whose elements the parser can build.
pub trait Coefficient: Field + Render {
    /// The domain variable named `name`, or `None` if the domain has no such variable.
    fn variable(ctx: &Self::Ctx, name: char) -> Option<Self>;
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at column {column}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken { found: String, expected: &'static str },
    UnexpectedEnd { expected: &'static str },
    ImplicitMultiplication,
    UnknownIdentifier(String),
    VariableNotPermitted(char),
    ZeroDenominator,
    NonConstantDivisor,
    ExponentTooLarge,
    EmptyInput,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match self {
            UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            UnexpectedToken { found, expected } => write!(f, "expected {expected}, found {found}"),
            UnexpectedEnd { expected } => write!(f, "expected {expected}, found end of input"),
            ImplicitMultiplication => write!(f, "missing operator (write multiplication with '*')"),
            UnknownIdentifier(s) => write!(f, "unknown identifier {s:?}"),
            VariableNotPermitted(c) => write!(f, "variable '{c}' is not permitted in this domain"),
            ZeroDenominator => write!(f, "division by zero"),
            NonConstantDivisor => write!(f, "divisor must not depend on z"),
            ExponentTooLarge => write!(f, "exponent exceeds {MAX_EXPONENT}"),
            EmptyInput => write!(f, "empty input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Var(c) => write!(f, "'{c}'"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((column, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            c if c.is_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let ident: String = chars[start..i].iter().collect();
                match ident.as_str() {
                    "x" | "y" | "z" => out.push((column, Tok::Var(c))),
                    _ => {
                        return Err(ParseError { column, kind: ParseErrorKind::UnknownIdentifier(ident) })
                    }
                }
                continue;
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(ParseError { column, kind: ParseErrorKind::UnexpectedChar(other) }),
        };
        out.push((column, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, C: Coefficient> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_column: usize,
    ctx: &'a C::Ctx,
}

impl<C: Coefficient> Parser<'_, C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_column, |(c, _)| *c)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { column: self.column(), kind }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken { found: t.to_string(), expected }),
            None => self.err(ParseErrorKind::UnexpectedEnd { expected }),
        }
    }

    fn expr(&mut self) -> Result<Poly<C>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.plus(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.minus(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<C>, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.times(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    let column = self.column();
                    self.pos += 1;
                    let divisor = self.unary()?;
                    let at = |kind| ParseError { column, kind };
                    if !divisor.is_constant() {
                        return Err(at(ParseErrorKind::NonConstantDivisor));
                    }
                    let inv = divisor
                        .leading()
                        .and_then(Field::inverse)
                        .ok_or_else(|| at(ParseErrorKind::ZeroDenominator))?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Int(_) | Tok::Var(_) | Tok::LParen) => {
                    return Err(self.err(ParseErrorKind::ImplicitMultiplication))
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly<C>, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.negate())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly<C>, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let Some(Tok::Int(e)) = self.peek().cloned() else {
            return Err(self.unexpected("non-negative integer exponent"));
        };
        let e = e
            .to_u32()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| self.err(ParseErrorKind::ExponentTooLarge))?;
        self.pos += 1;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Poly<C>, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.unexpected("a number, variable or '('"));
        };
        match tok {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(Poly::constant(C::from_int(self.ctx, &n)))
            }
            Tok::Var('z') => {
                self.pos += 1;
                Ok(Poly::var(self.ctx))
            }
            Tok::Var(v) => {
                let c = C::variable(self.ctx, v)
                    .ok_or_else(|| self.err(ParseErrorKind::VariableNotPermitted(v)))?;
                self.pos += 1;
                Ok(Poly::constant(c))
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected("')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, variable or '('")),
        }
    }
}

/// Parses `text` as a polynomial in `z` with coefficients in `C`.
pub fn parse_poly_in<C: Coefficient>(text: &str, ctx: &C::Ctx) -> Result<Poly<C>, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError { column: 1, kind: ParseErrorKind::EmptyInput });
    }
    let mut p = Parser { toks, pos: 0, end_column: text.chars().count() + 1, ctx };
    let out = p.expr()?;
    match p.peek() {
        None => Ok(out),
        Some(Tok::RParen) => Err(p.unexpected("an operator or end of input")),
        Some(_) => Err(p.err(ParseErrorKind::ImplicitMultiplication)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::ring::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn parse_q(s: &str) -> Result<Poly<Rational>, ParseError> {
        parse_poly_in::<Rational>(s, &())
    }

    #[test]
    fn eisenstein_fixture() {
        let f = parse_q("z^2 + 2*z + 2").unwrap();
        assert_eq!(f.coeffs(), &[q(2, 1), q(2, 1), q(1, 1)]);
    }

    #[test]
    fn zero_polynomial() {
        let f = parse_q("0").unwrap();
        assert!(f.is_zero());
        assert_eq!(f.degree(), None);
    }

    #[test]
    fn rational_literals_and_precedence() {
        let f = parse_q("-1/2*z^2 + 3/4").unwrap();
        assert_eq!(f.coeffs(), &[q(3, 4), q(0, 1), q(-1, 2)]);
        let g = parse_q("-(z - 1)^2").unwrap();
        assert_eq!(g.coeffs(), &[q(-1, 1), q(2, 1), q(-1, 1)]);
        let h = parse_q("2^3*z").unwrap();
        assert_eq!(h.coeffs(), &[q(0, 1), q(8, 1)]);
    }

    #[test]
    fn errors_carry_columns() {
        let e = parse_q("z^2 + 2z").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ImplicitMultiplication);
        assert_eq!(e.column, 8);

        let e = parse_q("z + x").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::VariableNotPermitted('x'));
        assert_eq!(e.column, 5);

        let e = parse_q("3/0 + z").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ZeroDenominator);
        assert_eq!(e.column, 2);

        let e = parse_q("1/z").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonConstantDivisor);

        let e = parse_q("(z + 1").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnexpectedEnd { .. }));
        assert_eq!(e.column, 7);

        assert!(matches!(parse_q("z $ 1").unwrap_err().kind, ParseErrorKind::UnexpectedChar('$')));
        assert!(matches!(parse_q("w").unwrap_err().kind, ParseErrorKind::UnknownIdentifier(_)));
        assert!(matches!(parse_q("z^").unwrap_err().kind, ParseErrorKind::UnexpectedEnd { .. }));
        assert!(matches!(parse_q("z^99999").unwrap_err().kind, ParseErrorKind::ExponentTooLarge));
        assert!(matches!(parse_q("   ").unwrap_err().kind, ParseErrorKind::EmptyInput));
        assert!(matches!(parse_q("z)").unwrap_err().kind, ParseErrorKind::UnexpectedToken { .. }));
        assert!(matches!(parse_q("z + * 2").unwrap_err().kind, ParseErrorKind::UnexpectedToken { .. }));
    }
}
