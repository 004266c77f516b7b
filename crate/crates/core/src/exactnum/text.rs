//! Character cursor shared by the scalar and element parsers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::GaussianRational;
use crate::error::ParseError;

pub(crate) struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    /// Next non-whitespace character, without consuming it.
    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            let pos = self.position();
            Err(ParseError::expecting(
                pos,
                &[&c.to_string()],
                format!("expected '{c}'"),
            ))
        }
    }

    pub(crate) fn position(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.position();
        let len = self.text[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.text.len() - start);
        if len == 0 {
            return Err(ParseError::expecting(start, &["digit"], "expected digits"));
        }
        self.pos = start + len;
        Ok(self.text[start..start + len].parse().expect("ascii digits"))
    }

    /// `[ "-" ] digits`, as a signed machine integer.
    pub(crate) fn int(&mut self) -> Result<i64, ParseError> {
        let start = self.position();
        let neg = self.eat('-');
        let value = self.digits()?;
        let value = if neg { -value } else { value };
        i64::try_from(value).map_err(|_| ParseError::new(start, "integer out of range"))
    }

    /// `digits [ "/" digits ]`, unsigned.
    pub(crate) fn rat(&mut self) -> Result<BigRational, ParseError> {
        let numer = self.digits()?;
        if self.eat('/') {
            let at = self.position();
            let denom = self.digits()?;
            if denom.is_zero() {
                return Err(ParseError::new(at, "zero denominator"));
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    /// Scalar body without surrounding parentheses.
    ///
    /// Accepts `rat`, `rat ("+"|"-") [rat] "i"` (only if `allow_complex`) and
    /// the imaginary-only forms `[rat] "i"`, each with an optional leading minus.
    pub(crate) fn scalar_body(&mut self, allow_complex: bool) -> Result<GaussianRational, ParseError> {
        let neg = self.eat('-');
        let sign = |r: BigRational, n: bool| if n { -r } else { r };
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let first = sign(self.rat()?, neg);
                if self.eat('i') {
                    return Ok(GaussianRational::new(BigRational::zero(), first));
                }
                if allow_complex {
                    let second = match self.peek() {
                        Some('+') => Some(false),
                        Some('-') => Some(true),
                        _ => None,
                    };
                    if let Some(neg_im) = second {
                        self.pos += 1;
                        let im = match self.peek() {
                            Some(c) if c.is_ascii_digit() => self.rat()?,
                            _ => BigRational::one(),
                        };
                        self.expect('i')?;
                        return Ok(GaussianRational::new(first, sign(im, neg_im)));
                    }
                }
                Ok(GaussianRational::new(first, BigRational::zero()))
            }
            Some('i') => {
                self.pos += 1;
                Ok(GaussianRational::new(
                    BigRational::zero(),
                    sign(BigRational::one(), neg),
                ))
            }
            _ => {
                let pos = self.position();
                Err(ParseError::expecting(
                    pos,
                    &["digit", "i"],
                    "expected a scalar",
                ))
            }
        }
    }

    /// `"(" body ")"` with complex parts, or a bare real / imaginary scalar.
    pub(crate) fn scalar(&mut self, allow_bare_complex: bool) -> Result<GaussianRational, ParseError> {
        if self.eat('(') {
            let value = self.scalar_body(true)?;
            self.expect(')')?;
            Ok(value)
        } else {
            self.scalar_body(allow_bare_complex)
        }
    }
}
