//! Words over named generators.
//!
//! Grammar (whitespace or `*` separate factors):
//!
//! ```text
//! word  := elem (('*' | ws) elem)*
//! elem  := atom ('^' signed-int)?
//! atom  := name | '(' word ')' | '[' word ',' word ']'
//! name  := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! `[x,y]` is the commutator x·y·x⁻¹·y⁻¹. The result is flattened to a list of
//! (name, exponent) letters with adjacent equal names merged and zero
//! exponents dropped.

use std::fmt;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator {name:?} at {pos}")]
    UnknownGenerator { name: String, pos: usize },
}

/// A word: letters (generator, nonzero exponent), freely reduced.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, serde::Serialize, serde::Deserialize)]
pub struct Letters(pub Vec<(String, i64)>);

impl Letters {
    pub fn empty() -> Self {
        Letters(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn single(name: &str, exp: i64) -> Self {
        let mut w = Letters::empty();
        w.push(name, exp);
        w
    }

    /// Append with free reduction against the last letter.
    pub fn push(&mut self, name: &str, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.0 == name {
                last.1 += exp;
                if last.1 == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push((name.to_string(), exp));
    }

    pub fn concat(&self, other: &Letters) -> Letters {
        let mut out = self.clone();
        for (n, e) in &other.0 {
            out.push(n, *e);
        }
        out
    }

    pub fn inverse(&self) -> Letters {
        let mut out = Letters::empty();
        for (n, e) in self.0.iter().rev() {
            out.push(n, -e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Letters {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Letters::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Total length counting multiplicity.
    pub fn length(&self) -> u64 {
        self.0.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    /// Letters expanded to unit steps.
    pub fn syllables(&self) -> impl Iterator<Item = (&str, i64)> + '_ {
        self.0
            .iter()
            .flat_map(|(n, e)| std::iter::repeat_n((n.as_str(), e.signum()), e.unsigned_abs() as usize))
    }
}

impl fmt::Display for Letters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "Id");
        }
        for (i, (n, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{n}")?;
            } else {
                write!(f, "{n}^{e}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    known: &'a dyn Fn(&str) -> bool,
    identity: Option<&'a str>,
}

impl Parser<'_> {
    fn syntax(&self, msg: impl Into<String>) -> WordError {
        WordError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), WordError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected {:?}", c as char)))
        }
    }

    fn exponent(&mut self) -> Result<i64, WordError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if digits == self.pos {
            return Err(self.syntax("expected integer exponent"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| WordError::Syntax { pos: start, msg: "exponent out of range".into() })
    }

    fn atom(&mut self) -> Result<Letters, WordError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word(b")")?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let x = self.word(b",")?;
                self.expect(b',')?;
                let y = self.word(b"]")?;
                self.expect(b']')?;
                Ok(x.concat(&y).concat(&x.inverse()).concat(&y.inverse()))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if self.identity == Some(name) {
                    return Ok(Letters::empty());
                }
                if !(self.known)(name) {
                    return Err(WordError::UnknownGenerator { name: name.to_string(), pos: start });
                }
                Ok(Letters::single(name, 1))
            }
            Some(c) => Err(self.syntax(format!("unexpected {:?}", c as char))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn elem(&mut self) -> Result<Letters, WordError> {
        let a = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.exponent()?;
            Ok(a.pow(k))
        } else {
            Ok(a)
        }
    }

    fn word(&mut self, stop: &[u8]) -> Result<Letters, WordError> {
        let mut acc = self.elem()?;
        loop {
            match self.peek() {
                None => return Ok(acc),
                Some(c) if stop.contains(&c) => return Ok(acc),
                Some(b'*') => {
                    self.pos += 1;
                }
                _ => {}
            }
            let e = self.elem()?;
            acc = acc.concat(&e);
        }
    }
}

/// Parse a word, validating generator names with `known`. `identity`, if
/// given, names the empty word.
pub fn parse_letters(
    text: &str,
    known: &dyn Fn(&str) -> bool,
    identity: Option<&str>,
) -> Result<Letters, WordError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, known, identity };
    let w = p.word(&[])?;
    if p.peek().is_some() {
        return Err(p.syntax("trailing input"));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn any(_: &str) -> bool {
        true
    }

    #[test]
    fn flattens_powers_and_groups() {
        let w = parse_letters("(Q*P^-1)^2", &any, None).unwrap();
        assert_eq!(w.to_string(), "Q*P^-1*Q*P^-1");
        let w = parse_letters("a a a^-1 b", &any, None).unwrap();
        assert_eq!(w.to_string(), "a*b");
        let w = parse_letters("(a b)^-1", &any, None).unwrap();
        assert_eq!(w.to_string(), "b^-1*a^-1");
    }

    #[test]
    fn commutator_bracket() {
        let w = parse_letters("[a,b]", &any, None).unwrap();
        assert_eq!(w.to_string(), "a*b*a^-1*b^-1");
        let w = parse_letters("[a, b^2]^0", &any, None).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn identity_name_and_errors() {
        let w = parse_letters("Id", &any, Some("Id")).unwrap();
        assert!(w.is_empty());
        assert!(matches!(
            parse_letters("a*", &any, None),
            Err(WordError::Syntax { .. })
        ));
        assert!(matches!(
            parse_letters("(a", &any, None),
            Err(WordError::Syntax { .. })
        ));
        let only_a = |s: &str| s == "a";
        assert_eq!(
            parse_letters("a*bb", &only_a, None),
            Err(WordError::UnknownGenerator { name: "bb".into(), pos: 2 })
        );
    }

    #[test]
    fn syllables_expand_exponents() {
        let w = parse_letters("a^2 b^-1", &any, None).unwrap();
        let s: Vec<_> = w.syllables().collect();
        assert_eq!(s, vec![("a", 1), ("a", 1), ("b", -1)]);
        assert_eq!(w.length(), 3);
    }
}
