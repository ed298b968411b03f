//! Parser for the canonical text rendering.
//!
//! Grammar (whitespace-insensitive around operators):
//!
//! ```text
//! ratexpr := '(' sum ')' '/' '(' sum ')' | sum
//! sum     := ['-'] term (('+'|'-') term)*
//! term    := rational ['*' factors] | factors
//! factors := factor ('*' factor)*
//! factor  := ident ['^' signed_rational]
//! ident   := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! `Display` output of [`LaurentExpr`] and [`RatExpr`] parses back to the
//! identical value (bit-exact round trip), which the tests pin down.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::SymError;
use crate::expr::{ExpMap, LaurentExpr, Monomial};
use crate::frac::RatExpr;
use crate::Rat;

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<(), SymError> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            got => Err(SymError::Parse(format!(
                "expected '{}' at byte {}, found {:?}",
                c as char,
                self.pos,
                got.map(|b| b as char)
            ))),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn parse_uint(&mut self) -> Result<BigInt, SymError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(SymError::Parse(format!("expected digits at byte {start}")));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        BigInt::from_str(text).map_err(|e| SymError::Parse(e.to_string()))
    }

    /// `['-'] digits ['/' digits]`
    fn parse_rational(&mut self) -> Result<Rat, SymError> {
        let negative = if self.peek() == Some(b'-') {
            self.bump();
            true
        } else {
            false
        };
        let num = self.parse_uint()?;
        let den = if self.peek() == Some(b'/') {
            self.bump();
            self.parse_uint()?
        } else {
            BigInt::one()
        };
        let v = Rat::new(num, den);
        Ok(if negative { -v } else { v })
    }

    fn parse_ident(&mut self) -> Result<String, SymError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.s.len() || !self.s[self.pos].is_ascii_alphabetic() {
            return Err(SymError::Parse(format!(
                "expected identifier at byte {start}"
            )));
        }
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .to_string())
    }

    /// One term without its leading sign.
    fn parse_term(&mut self) -> Result<Monomial, SymError> {
        let mut coeff = Rat::one();
        let mut exps = ExpMap::new();
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.parse_rational()?;
            if self.peek() == Some(b'*') {
                self.bump();
            } else {
                return Ok(Monomial { coeff, exps });
            }
        }
        loop {
            let name = self.parse_ident()?;
            let exp = if self.peek() == Some(b'^') {
                self.bump();
                self.parse_rational()?
            } else {
                Rat::one()
            };
            exps = exps.mul(&ExpMap::single(&name, exp));
            if self.peek() == Some(b'*') {
                self.bump();
            } else {
                break;
            }
        }
        Ok(Monomial { coeff, exps })
    }

    fn parse_sum(&mut self) -> Result<LaurentExpr, SymError> {
        let mut out = LaurentExpr::zero();
        let mut negate = if self.peek() == Some(b'-') {
            self.bump();
            true
        } else {
            false
        };
        loop {
            let mut term = self.parse_term()?;
            if negate {
                term.coeff = -term.coeff;
            }
            out = out.add(&LaurentExpr::from_monomial(term));
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    negate = false;
                }
                Some(b'-') => {
                    self.bump();
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(out)
    }
}

impl FromStr for LaurentExpr {
    type Err = SymError;

    fn from_str(s: &str) -> Result<Self, SymError> {
        let mut cur = Cursor::new(s);
        let expr = cur.parse_sum()?;
        if !cur.at_end() {
            return Err(SymError::Parse(format!(
                "trailing input at byte {}",
                cur.pos
            )));
        }
        Ok(expr)
    }
}

impl FromStr for RatExpr {
    type Err = SymError;

    fn from_str(s: &str) -> Result<Self, SymError> {
        let mut cur = Cursor::new(s);
        // A canonical fraction starts with '('; a plain sum never does.
        if cur.peek() == Some(b'(') {
            cur.expect(b'(')?;
            let num = cur.parse_sum()?;
            cur.expect(b')')?;
            cur.expect(b'/')?;
            cur.expect(b'(')?;
            let den = cur.parse_sum()?;
            cur.expect(b')')?;
            if !cur.at_end() {
                return Err(SymError::Parse(format!(
                    "trailing input at byte {}",
                    cur.pos
                )));
            }
            RatExpr::new(num, den)
        } else {
            let num = cur.parse_sum()?;
            if !cur.at_end() {
                return Err(SymError::Parse(format!(
                    "trailing input at byte {}",
                    cur.pos
                )));
            }
            Ok(RatExpr::from_laurent(num))
        }
    }
}
