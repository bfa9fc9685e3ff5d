//! Expression grammar for rational functions in `t`:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary | primary)*     juxtaposition multiplies
//! unary   := ('+' | '-') unary | power
//! power   := primary ('^' '-'? integer)?
//! primary := integer | 'i' | 't' | identifier | '(' expr ')'
//! ```
//!
//! The Unicode minus sign is accepted as `-`. Identifiers other than `t`
//! and `i` must be bound in the parameter table.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::gauss::GaussRational;
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

pub type Params = BTreeMap<String, GaussRational>;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    LParen,
    RParen,
}

fn err(msg: impl Into<String>, col: usize) -> Error {
    Error::Parse { msg: msg.into(), line: 1, col }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            out.push((Tok::Int(s.parse().expect("digits")), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push((Tok::Ident(chars[start..k].iter().collect()), col));
        } else {
            let tok = match c {
                '+' | '*' | '/' | '^' => Tok::Op(c),
                '-' | '\u{2212}' => Tok::Op('-'),
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => return Err(err(format!("unexpected character '{c}'"), col)),
            };
            out.push((tok, col));
            k += 1;
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
    params: &'a Params,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            let c = *c;
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let col = self.col();
                    let rhs = self.unary()?;
                    acc = acc
                        .checked_div(&rhs)
                        .map_err(|_| err("division by zero", col))?;
                }
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen) => {
                    let rhs = self.power()?;
                    acc = &acc * &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.primary()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let neg = if let Some(Tok::Op('-')) = self.peek() {
                self.pos += 1;
                true
            } else {
                false
            };
            let col = self.col();
            let e = match self.peek() {
                Some(Tok::Int(n)) => {
                    let v: i32 = n
                        .try_into()
                        .ok()
                        .filter(|v: &i32| *v <= 64)
                        .ok_or_else(|| err("exponent too large", col))?;
                    self.pos += 1;
                    v
                }
                _ => return Err(err("expected integer exponent", col)),
            };
            return base
                .powi(if neg { -e } else { e })
                .map_err(|_| err("negative power of zero", col));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<RationalFunction> {
        let col = self.col();
        let Some(tok) = self.peek().cloned() else {
            return Err(err("unexpected end of expression", col));
        };
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(RationalFunction::constant(GaussRational::real(
                BigRational::from_integer(n),
            ))),
            Tok::Ident(name) => match name.as_str() {
                "t" => Ok(RationalFunction::var()),
                "i" => Ok(RationalFunction::constant(GaussRational::i())),
                _ => self
                    .params
                    .get(&name)
                    .map(|v| RationalFunction::constant(v.clone()))
                    .ok_or_else(|| err(format!("unbound parameter '{name}'"), col)),
            },
            Tok::LParen => {
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(err("expected ')'", self.col())),
                }
            }
            Tok::RParen => Err(err("unexpected ')'", col)),
            Tok::Op(c) => Err(err(format!("unexpected operator '{c}'"), col)),
        }
    }
}

/// Parse a rational function of `t`. Columns in errors are 1-based
/// character offsets into `src`.
pub fn parse_rational_function(src: &str, params: &Params) -> Result<RationalFunction> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, end_col: src.chars().count() + 1, params };
    let f = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(err("unexpected trailing input", p.col()));
    }
    Ok(f)
}

/// Parse an expression that must be a constant (no `t`).
pub fn parse_constant(src: &str, params: &Params) -> Result<GaussRational> {
    let f = parse_rational_function(src, params)?;
    f.constant_value()
        .ok_or_else(|| err("expected a constant, found a function of t", 1))
}
