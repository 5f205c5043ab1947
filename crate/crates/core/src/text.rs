//! Textual forms: `(3,0,1,2,0)`, `[4,5,1,3,2]`, `((3,1,2);[3,1,2])`.
//! Parsing ignores whitespace; printing is canonical with no spaces.

use num::BigInt;

use crate::combinatorics::{Permutation, WeakComposition, WeakMopiscotion};
use crate::error::{Error, Result};
use crate::linear::Rational;

/// Byte cursor shared by the small hand-written parsers in this crate.
#[derive(Clone, Debug)]
pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn set_pos(&mut self, pos: usize) {
        self.pos = pos;
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    /// Next non-whitespace character, not consumed.
    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub fn expect_end(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    pub fn error(&mut self, msg: impl Into<String>) -> Error {
        self.skip_ws();
        Error::parse(self.pos, msg)
    }

    /// A run of ASCII digits.
    pub fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let s = &self.src[self.pos..self.pos + len];
        self.pos += len;
        Some(s)
    }

    pub fn natural(&mut self) -> Result<u64> {
        let start = self.pos;
        match self.digits() {
            Some(d) => d.parse().map_err(|_| Error::parse(start, "number too large")),
            None => Err(self.error("expected a nonnegative integer")),
        }
    }

    /// Optionally signed integer.
    pub fn integer(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let n = self.natural()? as i64;
        Ok(if neg { -n } else { n })
    }

    /// Unsigned `p` or `p/q`; the caller handles signs.
    pub fn unsigned_rational(&mut self) -> Result<Rational> {
        let p = self.digits().ok_or_else(|| self.error("expected a number"))?;
        let num: BigInt = p.parse().expect("digits");
        let save = self.pos;
        if self.eat('/') {
            let q_pos = self.pos;
            match self.digits() {
                Some(q) => {
                    let den: BigInt = q.parse().expect("digits");
                    if den == BigInt::from(0) {
                        return Err(Error::parse(q_pos, "zero denominator"));
                    }
                    return Ok(Rational::new(num, den));
                }
                None => self.set_pos(save),
            }
        }
        Ok(Rational::from_integer(num))
    }

    fn int_list(&mut self, open: char, close: char) -> Result<Vec<(usize, i64)>> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            self.skip_ws();
            let at = self.pos;
            out.push((at, self.integer()?));
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    pub fn weak_composition(&mut self) -> Result<WeakComposition> {
        let items = self.int_list('(', ')')?;
        let mut v = Vec::with_capacity(items.len());
        for (at, x) in items {
            if x < 0 {
                return Err(Error::parse(at, "negative entries are not allowed"));
            }
            v.push(u32::try_from(x).map_err(|_| Error::parse(at, "entry too large"))?);
        }
        Ok(WeakComposition::new(v))
    }

    pub fn permutation(&mut self) -> Result<Permutation> {
        self.skip_ws();
        let start = self.pos;
        let items = self.int_list('[', ']')?;
        let mut v = Vec::with_capacity(items.len());
        for (at, x) in items {
            if x <= 0 {
                return Err(Error::parse(at, "permutation values start at 1"));
            }
            v.push(x as usize);
        }
        Permutation::from_one_line(v).map_err(|e| Error::parse(start, e.to_string()))
    }

    /// `((a1,...,ak);[s1,...,sk])`
    pub fn weak_mopiscotion(&mut self) -> Result<WeakMopiscotion> {
        self.expect('(')?;
        self.skip_ws();
        let start = self.pos;
        let alpha = self.weak_composition()?;
        self.expect(';')?;
        let sigma = self.permutation()?;
        self.expect(')')?;
        WeakMopiscotion::new(alpha, sigma).map_err(|e| Error::parse(start, e.to_string()))
    }
}

fn whole<'a, T>(src: &'a str, f: impl FnOnce(&mut Cursor<'a>) -> Result<T>) -> Result<T> {
    let mut c = Cursor::new(src);
    let v = f(&mut c)?;
    c.expect_end()?;
    Ok(v)
}

pub fn parse_weak_composition(src: &str) -> Result<WeakComposition> {
    whole(src, Cursor::weak_composition)
}

pub fn parse_permutation(src: &str) -> Result<Permutation> {
    whole(src, Cursor::permutation)
}

pub fn parse_weak_mopiscotion(src: &str) -> Result<WeakMopiscotion> {
    whole(src, Cursor::weak_mopiscotion)
}
