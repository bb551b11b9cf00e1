//! Text form of field elements: a polynomial in `z` with rational
//! coefficients, e.g. `1/2*z^6 - 1/2`. Printing is canonical (highest power
//! first); parsing is whitespace-insensitive and reduces arbitrary powers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{CycNum, FieldError};

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..super::DEGREE).rev() {
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mag = c.abs();
            let power = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{mag}*{power}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> FieldError {
        FieldError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt, FieldError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit run parses"))
    }

    fn signed_integer(&mut self) -> Result<i64, FieldError> {
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let v: i64 = self
            .integer()?
            .try_into()
            .map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn factor(&mut self) -> Result<CycNum, FieldError> {
        match self.peek() {
            Some(b'z') => {
                self.pos += 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let e = self.signed_integer()?;
                    Ok(CycNum::zeta_pow(e))
                } else {
                    Ok(CycNum::zeta_pow(1))
                }
            }
            Some(b'0'..=b'9') => {
                let n = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    Ok(CycNum::from_rational(&BigRational::new(n, d)))
                } else {
                    Ok(CycNum::from_rational(&BigRational::from_integer(n)))
                }
            }
            Some(c) => Err(self.err(format!("unexpected character {:?}", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn term(&mut self) -> Result<CycNum, FieldError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc *= &self.factor()?;
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<CycNum, FieldError> {
        let mut acc = CycNum::zero();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                None => break,
                Some(c) => return Err(self.err(format!("unexpected character {:?}", c as char))),
            };
            first = false;
            let t = self.term()?;
            if negative {
                acc -= &t;
            } else {
                acc += &t;
            }
            if self.peek().is_none() {
                break;
            }
        }
        Ok(acc)
    }
}

impl FromStr for CycNum {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        if compact.is_empty() {
            return Err(FieldError::Parse { pos: 0, msg: "empty input".into() });
        }
        Parser { src: &compact, pos: 0 }.expr()
    }
}

impl serde::Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for CycNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_canonical_form() {
        let x: CycNum = "1/2*z^6 - 1/2".parse().unwrap();
        assert_eq!(x.to_string(), "1/2*z^6 - 1/2");
        assert_eq!(CycNum::zeta_pow(12).to_string(), "z^6 - 1");
        assert_eq!(CycNum::zero().to_string(), "0");
        assert_eq!(CycNum::zeta_pow(1).to_string(), "z");
        assert_eq!((-CycNum::zeta_pow(9)).to_string(), "-z^9");
    }

    #[test]
    fn parse_reduces_high_powers_and_ignores_whitespace() {
        let a: CycNum = " z ^ 12 ".parse().unwrap();
        assert_eq!(a, "z^6-1".parse().unwrap());
        let b: CycNum = "z^-1".parse().unwrap();
        assert_eq!(b, CycNum::zeta_pow(35));
        let c: CycNum = "-3 + 2*z*z".parse().unwrap();
        assert_eq!(c.to_string(), "2*z^2 - 3");
    }

    #[test]
    fn parse_errors_carry_position() {
        match "1/2*q".parse::<CycNum>() {
            Err(FieldError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!("1/0".parse::<CycNum>().is_err());
        assert!("".parse::<CycNum>().is_err());
        assert!("1 +".parse::<CycNum>().is_err());
    }

    #[test]
    fn json_uses_text_form() {
        let x: CycNum = "z^3 + z^-3".parse().unwrap();
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, format!("\"{x}\""));
        let back: CycNum = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }
}
