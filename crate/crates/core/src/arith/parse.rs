//! Reader for the canonical polynomial text form (and parenthesized products
//! of it), so rendered output can be read back.

use num_bigint::BigInt;

use super::poly::{Param, Poly};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{} at byte {} of {:?}",
            what,
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc
                        .exact_div(&d)
                        .ok_or_else(|| self.err("non-exact quotient"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.signed_int()?;
            if e < 0 {
                if base.is_monomial() {
                    let inv = Poly::one()
                        .exact_div(&base)
                        .ok_or_else(|| self.err("negative power of non-unit"))?;
                    return Ok(inv.pow((-e) as u32));
                }
                return Err(self.err("negative power of non-monomial"));
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        let v: i64 = s.parse().map_err(|_| self.err("expected integer"))?;
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("0");
                let v: BigInt = s.parse().map_err(|_| self.err("bad integer"))?;
                Ok(Poly::constant(v))
            }
            Some(c) => {
                let p = match c {
                    b'q' => Param::Q,
                    b't' => Param::T,
                    b'u' => Param::U,
                    b'v' => Param::V,
                    b'a' => Param::A,
                    _ => return Err(self.err("unexpected character")),
                };
                self.pos += 1;
                Ok(Poly::var(p))
            }
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses expressions such as `1 - t - q*t + q*t^2` or `(1 - t)*(1 - q*t)`.
pub fn parse_poly(s: &str) -> Result<Poly> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}
