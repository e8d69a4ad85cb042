//! ASCII text form: `3*t^2 - 5*t + 3`, `t^-1 + 1`, `(t - 1)(3t^2 - 5t + 3)`.
//!
//! Printing is descending in exponent with explicit signs. The parser accepts
//! that form plus implicit multiplication, parentheses, whitespace anywhere,
//! `^{k}` exponents and the Unicode minus sign.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::LaurentPoly;
use crate::error::{Error, Result};

const MAX_POWER: u32 = 1 << 16;

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exp, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if exp == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if exp == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{exp}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<(usize, char)> = s
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i, if c == '\u{2212}' { '-' } else { c }))
            .collect();
        if tokens.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut parser = Parser { tokens, pos: 0, end: s.len() };
        let value = parser.expr()?;
        if let Some((at, c)) = parser.peek_full() {
            return Err(parser.error_at(at, alloc::format!("unexpected '{c}'")));
        }
        Ok(value)
    }
}

struct Parser {
    tokens: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).map(|&(_, c)| c)
    }

    fn peek_full(&self) -> Option<(usize, char)> {
        self.tokens.get(self.pos).copied()
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn error_at(&self, pos: usize, msg: String) -> Error {
        Error::Syntax { pos, msg }
    }

    fn error(&self, msg: &str) -> Error {
        self.error_at(self.offset(), msg.to_string())
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc * self.power()?;
            } else if matches!(self.peek(), Some(c) if c == 't' || c == '(' || c.is_ascii_digit()) {
                acc = acc * self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.offset();
        let exp = self.exponent()?;
        if exp >= 0 {
            let e = u32::try_from(exp).ok().filter(|&e| e <= MAX_POWER);
            let e = e.ok_or_else(|| self.error_at(at, "exponent too large".to_string()))?;
            return Ok(base.pow(e));
        }
        if !base.is_unit() {
            return Err(self.error_at(at, "negative power of a non-unit".to_string()));
        }
        // (±t^k)^(-n) = ±t^(-kn) with the sign raised to n
        let k = base.min_exp().unwrap();
        let sign = if base.trailing_coeff().unwrap().is_negative() && exp % 2 != 0 { -1 } else { 1 };
        Ok(LaurentPoly::monomial(sign, k * exp))
    }

    fn exponent(&mut self) -> Result<i64> {
        let close = if self.eat('{') {
            Some('}')
        } else if self.eat('(') {
            Some(')')
        } else {
            None
        };
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let digits = self.digits().ok_or_else(|| self.error("expected exponent"))?;
        let value: i64 = digits.parse().map_err(|_| self.error("exponent too large"))?;
        if let Some(c) = close {
            if !self.eat(c) {
                return Err(self.error("unclosed exponent"));
            }
        }
        Ok(if neg { -value } else { value })
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.tokens[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                Ok(LaurentPoly::t())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits().unwrap();
                let value: BigInt = digits.parse().map_err(|_| self.error("bad integer"))?;
                Ok(LaurentPoly::constant(value))
            }
            Some(_) => Err(self.error("expected integer, 't' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn parse(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn prints_descending_with_explicit_signs() {
        let p = LaurentPoly::from_terms([(0, 3), (1, -5), (2, 3)]);
        assert_eq!(p.to_string(), "3*t^2 - 5*t + 3");
        assert_eq!(LaurentPoly::from_terms([(-1, 1), (0, 1)]).to_string(), "1 + t^-1");
        assert_eq!(LaurentPoly::from_terms([(3, -1)]).to_string(), "-t^3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::one().to_string(), "1");
    }

    #[test]
    fn parses_documented_forms() {
        assert_eq!(parse("3*t^2 - 5*t + 3"), LaurentPoly::from_terms([(0, 3), (1, -5), (2, 3)]));
        assert_eq!(parse("t^-1 + 1"), LaurentPoly::from_terms([(-1, 1), (0, 1)]));
        assert_eq!(parse("  3t^2-5 t+3 "), parse("3*t^2 - 5*t + 3"));
        assert_eq!(parse("t^{-2}"), LaurentPoly::monomial(1, -2));
        assert_eq!(parse("(-1+t)(3t^2-5t+3)"), parse("3t^3 - 8t^2 + 8t - 3"));
        assert_eq!(parse("t(5t-3t^2-3)"), parse("-3t^3 + 5t^2 - 3t"));
        assert_eq!(parse("(1-t+t^2)^2"), parse("1-2t+3t^2-2t^3+t^4"));
        assert_eq!(parse("\u{2212}t + 2"), parse("2 - t"));
        assert_eq!(parse("(-t)^-3"), LaurentPoly::monomial(-1, -3));
        assert_eq!(parse("-0"), LaurentPoly::zero());
    }

    #[test]
    fn rejects_malformed_text() {
        assert_eq!("".parse::<LaurentPoly>(), Err(Error::EmptyInput));
        assert!(matches!("3 +".parse::<LaurentPoly>(), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!("x + 1".parse::<LaurentPoly>(), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!("(t+1".parse::<LaurentPoly>(), Err(Error::Syntax { .. })));
        assert!(matches!("(t+1)^-1".parse::<LaurentPoly>(), Err(Error::Syntax { pos: 6, .. })));
        assert!(matches!("t^".parse::<LaurentPoly>(), Err(Error::Syntax { .. })));
        assert!(matches!("t)".parse::<LaurentPoly>(), Err(Error::Syntax { pos: 1, .. })));
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(low in -4i64..4, cs in proptest::collection::vec(-20i64..=20, 0..6)) {
            let p = LaurentPoly::from_dense(low, cs.into_iter().map(BigInt::from).collect());
            prop_assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
        }
    }
}
