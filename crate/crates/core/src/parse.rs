//! Text parser for polynomials.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! poly   := term (('+' | '-') term)*
//! term   := ('+' | '-')? factor ('*'? factor)*
//! factor := atom ('^' exponent)?
//! atom   := integer | identifier | '(' poly ')'
//! ```
//!
//! Integer coefficients are reduced modulo `p`; exponents are positive integers.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::Polynomial;
use crate::ring::WeightedRing;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a WeightedRing,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        position,
        message: message.into(),
    })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn starts_factor(c: u8) -> bool {
        c.is_ascii_alphanumeric() || c == b'_' || c == b'('
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term_unsigned()?;
            acc = if c == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.term_unsigned()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term_unsigned()
            }
            _ => self.term_unsigned(),
        }
    }

    fn term_unsigned(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.try_mul(&f)?;
                }
                Some(c) if Self::starts_factor(c) => {
                    let f = self.factor()?;
                    acc = acc.try_mul(&f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.exponent()?;
            return base.pow(k as u64);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start, "malformed exponent: expected a positive integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse::<u32>() {
            Ok(0) => err(start, "malformed exponent: exponents must be positive"),
            Ok(k) => Ok(k),
            Err(_) => err(start, "malformed exponent: too large"),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let Some(c) = self.peek() else {
            return err(self.pos, "unexpected end of input");
        };
        let start = self.pos;
        if c.is_ascii_digit() {
            let field = self.ring.field();
            let mut v = FieldElement::ZERO;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                let d = (self.src[self.pos] - b'0') as i64;
                v = field.add(field.mul(v, field.element(10)), field.element(d));
                self.pos += 1;
            }
            return Ok(Polynomial::constant(self.ring, v.value() as i64));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            return match self.ring.var_index(name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => err(start, format!("unknown identifier `{name}`")),
            };
        }
        if c == b'(' {
            self.pos += 1;
            let inner = self.poly()?;
            if self.peek() != Some(b')') {
                return err(self.pos, "expected `)`");
            }
            self.pos += 1;
            return Ok(inner);
        }
        err(start, format!("unexpected character `{}`", c as char))
    }
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse_poly(text: &str, ring: &WeightedRing) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    if p.peek().is_none() {
        return err(0, "empty input");
    }
    let f = p.poly()?;
    if let Some(c) = p.peek() {
        return err(p.pos, format!("unexpected trailing `{}`", c as char));
    }
    Ok(f)
}

pub fn parse_polys<S: AsRef<str>>(texts: &[S], ring: &WeightedRing) -> Result<Vec<Polynomial>> {
    texts.iter().map(|t| parse_poly(t.as_ref(), ring)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64) -> WeightedRing {
        WeightedRing::new(p, &["x", "y", "z"], &[15, 10, 6]).unwrap()
    }

    #[test]
    fn parses_defining_equation() {
        let f = parse_poly("x^2 + y^3 + z^5", &ring(2)).unwrap();
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn reduces_coefficients() {
        let r = ring(5);
        let f = parse_poly("-2*x*y", &r).unwrap();
        assert_eq!(f, parse_poly("3*x*y", &r).unwrap());
        assert_eq!(f.terms()[0].1.value(), 3);
    }

    #[test]
    fn implicit_multiplication_and_parentheses() {
        let r = ring(7);
        assert_eq!(parse_poly("3 x y", &r).unwrap(), parse_poly("3*x*y", &r).unwrap());
        assert_eq!(
            parse_poly("(x + y)^2", &r).unwrap(),
            parse_poly("x^2 + 2*x*y + y^2", &r).unwrap()
        );
        assert_eq!(parse_poly("2^3", &r).unwrap(), Polynomial::constant(&r, 1));
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring(2);
        assert!(matches!(parse_poly("x^", &r), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_poly("x + w", &r), Err(Error::Parse { position: 4, .. })));
        assert!(matches!(parse_poly("   ", &r), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_poly("x^0", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("(x + y", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x $", &r), Err(Error::Parse { position: 2, .. })));
    }
}
