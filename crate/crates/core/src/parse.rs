//! Text syntax for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Variables are the ring's variable names. Names ending in `_` may carry an
//! index group, so `x_( 0 , 1 )` is read as `x_(0,1)`. Whitespace is ignored.
//! [`Polynomial`]'s `Display` output parses back to the same polynomial.

use crate::error::{AlgebraError, Result};
use crate::poly::Polynomial;
use crate::ring::MultigradedRing;

pub fn parse_polynomial(text: &str, ring: &MultigradedRing) -> Result<Polynomial> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, ring };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty polynomial"));
    }
    let f = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(f)
}

/// Like [`parse_polynomial`] but rejects polynomials whose terms have
/// different multidegrees.
pub fn parse_homogeneous(text: &str, ring: &MultigradedRing) -> Result<Polynomial> {
    let f = parse_polynomial(text, ring)?;
    if !f.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous);
    }
    Ok(f)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    ring: &'a MultigradedRing,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.ring.zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    1
                }
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '(' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<u64>().map_err(|_| AlgebraError::Parse { pos: start, msg: "integer too large".into() })
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let p = self.ring.field().characteristic() as u64;
                Ok(self.ring.constant((n % p) as i64))
            }
            Some(c) if c.is_ascii_alphabetic() => self.variable(),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }

    fn variable(&mut self) -> Result<Polynomial> {
        let start = self.pos;
        let mut name = String::new();
        while self.pos < self.chars.len() {
            let c = self.chars[self.pos];
            if c.is_ascii_alphanumeric() || c == '_' {
                name.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        if name.ends_with('_') {
            self.skip_ws();
            if self.chars.get(self.pos) == Some(&'(') {
                self.pos += 1;
                name.push('(');
                loop {
                    match self.chars.get(self.pos) {
                        None => return Err(self.error("unterminated variable index")),
                        Some(')') => {
                            self.pos += 1;
                            name.push(')');
                            break;
                        }
                        Some(c) if c.is_whitespace() => self.pos += 1,
                        Some(&c) => {
                            name.push(c);
                            self.pos += 1;
                        }
                    }
                }
            }
        }
        match self.ring.names().iter().position(|n| *n == name) {
            Some(v) => Ok(self.ring.var(v)),
            None => Err(AlgebraError::Parse { pos: start, msg: format!("unknown variable {name}") }),
        }
    }
}
