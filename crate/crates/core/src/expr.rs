//! Text syntax for elements of `R` and `S`.
//!
//! Accepts sums, differences and (noncommutative) products of integers, `x`,
//! `y` and parenthesised subexpressions, with integer exponents written `^k`,
//! `^{k}` or `^(k)`. Juxtaposition multiplies, so `(y - x^-1)(x^4 - x)y^-1`
//! is valid. Negative powers are only defined for units `±yᵐxⁿ`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::klein::SPoly;
use crate::laurent::RPoly;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Caret,
    Open(char),
    Close(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut end = pos + c.len_utf8();
                while let Some(&(p, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = p + d.len_utf8();
                    chars.next();
                }
                Tok::Num(text[pos..end].parse().expect("ascii digits"))
            }
            'x' => Tok::X,
            'y' => Tok::Y,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{b7}' => Tok::Star,
            '^' => Tok::Caret,
            '(' | '{' => Tok::Open(c),
            ')' | '}' => Tok::Close(c),
            _ => return Err(Error::parse("unexpected character", c.to_string(), pos)),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.toks.get(self.at).map_or(self.text.len(), |(p, _)| *p)
    }

    fn error(&self, message: &str) -> Error {
        let pos = self.position();
        let token: String = self.text[pos..].chars().take(8).collect();
        let token = if token.is_empty() { "<end>".to_string() } else { token };
        Error::parse(message, token, pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<SPoly> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -self.term()?
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.power()?;
                }
                Some(Tok::Num(_) | Tok::X | Tok::Y | Tok::Open(_)) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<SPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let pos = self.position();
        let k = self.exponent()?;
        base.pow(k).map_err(|_| {
            Error::parse("negative power of a non-unit", self.text[pos..].chars().take(8).collect::<String>(), pos)
        })
    }

    fn exponent(&mut self) -> Result<i64> {
        let close = match self.peek() {
            Some(Tok::Open('(')) => Some(Tok::Close(')')),
            Some(Tok::Open('{')) => Some(Tok::Close('}')),
            _ => None,
        };
        if close.is_some() {
            self.bump();
        }
        let negative = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let k = match self.peek() {
            Some(Tok::Num(n)) => i64::try_from(n.clone()).map_err(|_| self.error("exponent out of range"))?,
            _ => return Err(self.error("exponent is not an integer")),
        };
        self.bump();
        if let Some(close) = close {
            if self.peek() != Some(&close) {
                return Err(self.error("unbalanced exponent bracket"));
            }
            self.bump();
        }
        Ok(if negative { -k } else { k })
    }

    fn atom(&mut self) -> Result<SPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.bump();
                Ok(SPoly::from_r(RPoly::constant(n)))
            }
            Some(Tok::X) => {
                self.bump();
                Ok(SPoly::x_pow(1))
            }
            Some(Tok::Y) => {
                self.bump();
                Ok(SPoly::y_pow(1))
            }
            Some(Tok::Open(open)) => {
                self.bump();
                let inner = self.expr()?;
                let close = if open == '(' { ')' } else { '}' };
                if self.peek() != Some(&Tok::Close(close)) {
                    return Err(self.error("expected closing bracket"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error("expected a number, x, y or `(`")),
        }
    }
}

pub fn parse_spoly(text: &str) -> Result<SPoly> {
    let toks = lex(text)?;
    let mut p = Parser { text, toks, at: 0 };
    let value = p.expr()?;
    if p.at < p.toks.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

pub fn parse_rpoly(text: &str) -> Result<RPoly> {
    parse_spoly(text)?
        .as_r()
        .ok_or_else(|| Error::parse("expected a polynomial in x only", text, 0))
}
