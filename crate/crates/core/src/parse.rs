//! Parsers for polynomial expressions and ring declarations.
//!
//! Expression grammar: rational or integer literals, declared variables,
//! `+ - * ^` and parentheses. `^` binds tighter than `*`, which binds
//! tighter than `+`/`-`; multiplication is always explicit; unary minus is
//! allowed and binds looser than `^`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::CoefficientField;
use crate::poly::Polynomial;
use crate::ring::RingDescriptor;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let value = text
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("integer literal `{text}` out of range")))?;
                tokens.push(Token::Int(value));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                tokens.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a Arc<RingDescriptor>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.bump() {
            Some(found) if found == t => Ok(()),
            Some(found) => Err(Error::Parse(format!("expected {t:?}, found {found:?}"))),
            None => Err(Error::Parse(format!("expected {t:?}, found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Token::Star) {
            self.bump();
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.peek() == Some(&Token::Minus) {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.bump();
            let exp = match self.bump() {
                Some(Token::Int(n)) => n,
                Some(Token::Minus) => {
                    return Err(Error::Parse("negative exponent".into()));
                }
                other => {
                    return Err(Error::Parse(format!(
                        "malformed exponent: expected a nonnegative integer, found {other:?}"
                    )));
                }
            };
            let exp = u32::try_from(exp)
                .map_err(|_| Error::Parse("malformed exponent".into()))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Some(Token::Int(n)) => {
                let field = self.ring.field();
                // A `/` directly after an integer forms a rational literal.
                if self.peek() == Some(&Token::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Token::Int(d)) => {
                            Ok(Polynomial::constant(self.ring, field.from_ratio(n, d)?))
                        }
                        other => Err(Error::Parse(format!(
                            "expected integer denominator, found {other:?}"
                        ))),
                    }
                } else {
                    Ok(Polynomial::constant(self.ring, field.from_integer(n)))
                }
            }
            Some(Token::Ident(name)) => match self.ring.variable_index(&name) {
                Some(i) => Ok(Polynomial::variable(self.ring, i)),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parse one polynomial in the given ring.
pub fn parse_polynomial(input: &str, ring: &Arc<RingDescriptor>) -> Result<Polynomial> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        ring,
    };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            parser.tokens[parser.pos]
        )));
    }
    Ok(poly)
}

/// Parse a comma-separated list of polynomials: `x*y, x*z`.
pub fn parse_polynomial_list(input: &str, ring: &Arc<RingDescriptor>) -> Result<Vec<Polynomial>> {
    input
        .split(',')
        .map(|part| parse_polynomial(part, ring))
        .collect()
}

/// Parse a ring declaration: `QQ[x,y,z]` or `Fp(32003)[x,y]`.
pub fn parse_ring(input: &str) -> Result<Arc<RingDescriptor>> {
    let s = input.trim();
    let bracket = s
        .find('[')
        .ok_or_else(|| Error::InvalidRing(format!("missing `[` in `{s}`")))?;
    if !s.ends_with(']') {
        return Err(Error::InvalidRing(format!("missing `]` in `{s}`")));
    }
    let head = s[..bracket].trim();
    let vars_text = &s[bracket + 1..s.len() - 1];
    let field = if head == "QQ" {
        CoefficientField::Rationals
    } else if let Some(rest) = head.strip_prefix("Fp") {
        let rest = rest.trim();
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidRing(format!("malformed prime field `{head}`")))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| Error::InvalidRing(format!("bad modulus `{inner}`")))?;
        CoefficientField::prime_field(p)?
    } else {
        return Err(Error::InvalidRing(format!(
            "unknown coefficient field `{head}` (expected QQ or Fp(p))"
        )));
    };
    let vars: Vec<&str> = vars_text
        .split(',')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .collect();
    RingDescriptor::new(vars, field)
}
