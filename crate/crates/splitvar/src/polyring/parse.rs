//! A small expression parser for polynomials, used for reference data,
//! test expectations, and the external oracle-file format.
//!
//! Grammar: `+ - * / ^` with usual precedence, parentheses, integer
//! literals, `zeta` for the fixed root of unity, and declared variable
//! names. Division is only defined by units (constants and unit
//! monomials). Exponents are integers, negative ones parenthesized:
//! `a^(-1)`.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{LaurentPoly, RingSpec};
use crate::cyclotomic::{zeta, CycloNum};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '/' => {
                chars.next();
                tokens.push(Token::Slash);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Int(s.parse().unwrap()));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(s));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(tokens)
}

struct Parser<'r> {
    ring: &'r Arc<RingSpec>,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'r> Parser<'r> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.next() {
            Some(got) if got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                self.next();
                negate = true;
            }
            Some(Token::Plus) => {
                self.next();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Token::Slash) => {
                    self.next();
                    let f = self.factor()?;
                    let inv = invert_unit(&f)?;
                    acc = acc.mul(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.next();
            let e = self.exponent()?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        match self.next() {
            Some(Token::Int(k)) => Ok(int_to_i64(&k)?),
            Some(Token::Minus) => match self.next() {
                Some(Token::Int(k)) => Ok(-int_to_i64(&k)?),
                got => Err(Error::Parse(format!("expected integer exponent, found {got:?}"))),
            },
            Some(Token::LParen) => {
                let neg = if self.peek() == Some(&Token::Minus) {
                    self.next();
                    true
                } else {
                    false
                };
                let k = match self.next() {
                    Some(Token::Int(k)) => int_to_i64(&k)?,
                    got => {
                        return Err(Error::Parse(format!(
                            "expected integer exponent, found {got:?}"
                        )))
                    }
                };
                self.expect(Token::RParen)?;
                Ok(if neg { -k } else { k })
            }
            got => Err(Error::Parse(format!("expected exponent, found {got:?}"))),
        }
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.next() {
            Some(Token::Int(k)) => Ok(LaurentPoly::constant(
                self.ring,
                CycloNum::from_rational(
                    self.ring.coeff_order(),
                    num_rational::BigRational::from_integer(k),
                ),
            )),
            Some(Token::Ident(name)) => {
                if name == "zeta" {
                    Ok(LaurentPoly::constant(
                        self.ring,
                        zeta(self.ring.coeff_order())?,
                    ))
                } else if let Some(idx) = self.ring.var_index(&name) {
                    Ok(LaurentPoly::var(self.ring, idx))
                } else {
                    Err(Error::Parse(format!("unknown variable `{name}`")))
                }
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            got => Err(Error::Parse(format!("unexpected token {got:?}"))),
        }
    }
}

fn int_to_i64(k: &BigInt) -> Result<i64> {
    i64::try_from(k).map_err(|_| Error::Parse(format!("exponent {k} out of range")))
}

fn invert_unit(f: &LaurentPoly) -> Result<LaurentPoly> {
    if f.is_unit_monomial() {
        f.unit_inverse()
    } else if f.num_terms() == 1 && f.leading().unwrap().0.is_one() {
        let c = f.leading().unwrap().1.inv()?;
        Ok(LaurentPoly::constant(f.ring(), c))
    } else {
        Err(Error::Parse(format!("division by non-unit `{f}`")))
    }
}

/// Parse one polynomial expression in the given ring.
pub fn parse_poly(ring: &Arc<RingSpec>, input: &str) -> Result<LaurentPoly> {
    let tokens = lex(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { ring, tokens, pos: 0 };
    let poly = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {}",
            p.pos
        )));
    }
    Ok(poly)
}

/// Parse a scalar expression (no variables) into Q(zeta_n).
pub fn parse_cyclo(order: u32, input: &str) -> Result<CycloNum> {
    let ring = RingSpec::new(order, &[], &[])?;
    let p = parse_poly(&ring, input)?;
    Ok(p.coeff_of(&super::Mono::one(0)))
}
