//! The bit-exact number literal grammar.
//!
//! A literal is `[P, Q]` where `P`, `Q` are decimal integers or `num/den`
//! fractions with a positive denominator; whitespace is insensitive. In the
//! golden system the literal denotes `P + Q*tau`; the dyadic system requires
//! `Q = 0` and a power-of-two denominator on `P`. Formatting and parsing
//! round-trip exactly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{CoordinateSystem, GoldenNumber, Rational};

/// A parse failure, with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == b {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(self.pos, format!("expected '{}'", b as char)))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.bytes.len() && (self.bytes[self.pos] == b'-' || self.bytes[self.pos] == b'+')
        {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(ParseError::new(self.pos, "expected a decimal integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<BigInt>()
            .map_err(|e| ParseError::new(start, format!("bad integer: {e}")))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.integer()?;
        self.skip_ws();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == b'/' {
            self.pos += 1;
            let den_pos = self.pos;
            let denom = self.integer()?;
            if denom <= BigInt::from(0) {
                return Err(ParseError::new(den_pos, "denominator must be positive"));
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.bytes.len() {
            Ok(())
        } else {
            Err(ParseError::new(self.pos, "trailing input"))
        }
    }
}

/// Parses a rational fragment `P` or `P/Q` on its own (used inside other
/// record formats); no coordinate-system validation.
pub fn parse_rational_text(text: &str) -> Result<Rational, ParseError> {
    let mut cur = Cursor::new(text);
    let r = cur.rational()?;
    cur.end()?;
    Ok(r)
}

/// Parses a `[P, Q]` literal and validates it for the coordinate system.
pub fn parse_number(text: &str, cs: &CoordinateSystem) -> Result<GoldenNumber, ParseError> {
    let mut cur = Cursor::new(text);
    cur.expect(b'[')?;
    let p = cur.rational()?;
    cur.expect(b',')?;
    let q_pos = {
        cur.skip_ws();
        cur.pos
    };
    let q = cur.rational()?;
    cur.expect(b']')?;
    cur.end()?;
    let x = GoldenNumber::new(p, q);
    cs.validate_number(&x)
        .map_err(|m| ParseError::new(q_pos, m))?;
    Ok(x)
}

/// Canonical rational formatting: `n` for integers, `n/d` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
