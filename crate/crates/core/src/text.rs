//! Text grammar for endpoints, subsets and triples.
//!
//! ```text
//! triple   := "(" subset ";" subset ";" subset ")"
//! subset   := term ("U" term)*
//! term     := "[" endpoint "," endpoint "]" | "{" endpoint "}"
//! endpoint := number ("+" | "-")?
//! number   := digits ("." digits)? | digits "/" digits
//! ```
//!
//! A trailing `+` or `-` adds or subtracts one infinitesimal, so `1+` is
//! `1 + ε` and `0-` is `0 − ε`. Numbers are unsigned; decimals become exact
//! rationals (`0.3` is `3/10`). Whitespace may appear between tokens but not
//! between a number and its sign. Formatting always prints exact rationals,
//! never decimals, so `format` followed by `parse` reproduces the value.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::hyperreal::Hyperreal;
use crate::subset::{Interval, Subset, SubsetError};
use crate::taxonomy::Triple;

/// Which component of a triple failed to parse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleComponent {
    Truth,
    Indeterminacy,
    Falsity,
}

impl fmt::Display for TripleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TripleComponent::Truth => "T",
            TripleComponent::Indeterminacy => "I",
            TripleComponent::Falsity => "F",
        })
    }
}

/// Parse failure; offsets are byte positions into the input (the grammar is
/// ASCII, so they double as character offsets).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("value out of range at offset {offset}: {literal} is outside [0-, 1+]")]
    OutOfRange { offset: usize, literal: String },
    #[error("interval bounds out of order at offset {offset}")]
    InvertedInterval { offset: usize },
    #[error("empty subset at offset {offset}: a component needs at least one value")]
    EmptySubset { offset: usize },
    #[error("component {component}: {source}")]
    Component {
        component: TripleComponent,
        #[source]
        source: Box<ParseError>,
    },
}

impl ParseError {
    fn syntax(offset: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            offset,
            message: message.into(),
        }
    }

    /// Byte offset of the failure; for component errors, of the inner one.
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::OutOfRange { offset, .. }
            | ParseError::InvertedInterval { offset }
            | ParseError::EmptySubset { offset } => *offset,
            ParseError::Component { source, .. } => source.offset(),
        }
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn expect(&mut self, wanted: u8) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b) if b == wanted => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(ParseError::syntax(
                self.pos,
                format!("expected '{}'", wanted as char),
            )),
        }
    }

    fn at_end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos < self.bytes.len() {
            Err(ParseError::syntax(self.pos, "unexpected trailing input"))
        } else {
            Ok(())
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::syntax(start, "expected a digit"));
        }
        // slicing on ASCII digit boundaries is always valid UTF-8
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    fn number(&mut self) -> Result<BigRational, ParseError> {
        let int_part = self.digits()?;
        let numer: BigInt = int_part.parse().unwrap();
        match self.peek() {
            Some(b'.') => {
                self.pos += 1;
                let frac_start = self.pos;
                let frac = self.digits().map_err(|_| {
                    ParseError::syntax(frac_start, "expected digits after the decimal point")
                })?;
                let scale = BigInt::from(10u32).pow(frac.len() as u32);
                let frac_numer: BigInt = frac.parse().unwrap();
                Ok(BigRational::new(numer * &scale + frac_numer, scale))
            }
            Some(b'/') => {
                self.pos += 1;
                let den_start = self.pos;
                let den = self
                    .digits()
                    .map_err(|_| ParseError::syntax(den_start, "expected a denominator"))?;
                let denom: BigInt = den.parse().unwrap();
                if denom.is_zero() {
                    return Err(ParseError::syntax(den_start, "denominator must be nonzero"));
                }
                Ok(BigRational::new(numer, denom))
            }
            _ => Ok(BigRational::from_integer(numer)),
        }
    }

    fn endpoint(&mut self) -> Result<Hyperreal, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if !matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            return Err(ParseError::syntax(self.pos, "expected a number"));
        }
        let std = self.number()?;
        // the sign binds tightly: no whitespace between number and sign
        let eps = match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                BigRational::from_integer(BigInt::from(1))
            }
            Some(b'-') => {
                self.pos += 1;
                BigRational::from_integer(BigInt::from(-1))
            }
            _ => BigRational::zero(),
        };
        let value = Hyperreal::new(std, eps);
        if !value.in_unit_range() {
            let literal = std::str::from_utf8(&self.bytes[start..self.pos])
                .unwrap()
                .to_string();
            return Err(ParseError::OutOfRange {
                offset: start,
                literal,
            });
        }
        Ok(value)
    }

    fn term(&mut self) -> Result<Interval, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.bump() {
            Some(b'[') => {
                let lo = self.endpoint()?;
                self.expect(b',')?;
                let hi = self.endpoint()?;
                self.expect(b']')?;
                Interval::new(lo, hi).map_err(|e| match e {
                    SubsetError::InvertedBounds { .. } => {
                        ParseError::InvertedInterval { offset: start }
                    }
                    // endpoints were range-checked individually already
                    _ => ParseError::syntax(start, "invalid interval"),
                })
            }
            Some(b'{') => {
                self.skip_ws();
                if self.peek() == Some(b'}') {
                    return Err(ParseError::EmptySubset { offset: self.pos });
                }
                let p = self.endpoint()?;
                self.expect(b'}')?;
                Ok(Interval::point(p).expect("endpoint already range-checked"))
            }
            _ => Err(ParseError::syntax(
                start,
                "expected '[' or '{' to start a term",
            )),
        }
    }

    fn subset(&mut self) -> Result<Subset, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'[') | Some(b'{') => {}
            Some(b';') | Some(b')') | None => {
                return Err(ParseError::EmptySubset { offset: self.pos })
            }
            _ => {
                return Err(ParseError::syntax(
                    self.pos,
                    "expected '[' or '{' to start a term",
                ))
            }
        }
        let mut intervals = vec![self.term()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'U') {
                self.pos += 1;
                intervals.push(self.term()?);
            } else {
                break;
            }
        }
        Ok(Subset::new(intervals).expect("at least one term collected"))
    }

    fn component(&mut self, which: TripleComponent) -> Result<Subset, ParseError> {
        self.subset().map_err(|e| ParseError::Component {
            component: which,
            source: Box::new(e),
        })
    }

    fn triple(&mut self) -> Result<Triple, ParseError> {
        self.expect(b'(')?;
        let truth = self.component(TripleComponent::Truth)?;
        self.expect(b';')?;
        let indeterminacy = self.component(TripleComponent::Indeterminacy)?;
        self.expect(b';')?;
        let falsity = self.component(TripleComponent::Falsity)?;
        self.expect(b')')?;
        Ok(Triple::new(truth, indeterminacy, falsity))
    }
}

/// Parses a lone endpoint literal such as `1+`, `0-`, `0.3` or `2/5`.
pub fn parse_endpoint(input: &str) -> Result<Hyperreal, ParseError> {
    let mut cur = Cursor::new(input);
    let value = cur.endpoint()?;
    cur.at_end()?;
    Ok(value)
}

/// Parses a subset expression such as `[0.2,0.4] U {0.7}`.
pub fn parse_subset(input: &str) -> Result<Subset, ParseError> {
    let mut cur = Cursor::new(input);
    let value = cur.subset()?;
    cur.at_end()?;
    Ok(value)
}

/// Parses a triple literal such as `({1};{0.3};{1})`.
pub fn parse_triple(input: &str) -> Result<Triple, ParseError> {
    let mut cur = Cursor::new(input);
    let value = cur.triple()?;
    cur.at_end()?;
    Ok(value)
}

/// Parses an unsigned rational (decimal or fraction); used for grid lists.
pub fn parse_rational(input: &str) -> Result<BigRational, ParseError> {
    let mut cur = Cursor::new(input);
    cur.skip_ws();
    if !matches!(cur.peek(), Some(b) if b.is_ascii_digit()) {
        return Err(ParseError::syntax(cur.pos, "expected a number"));
    }
    let value = cur.number()?;
    cur.at_end()?;
    Ok(value)
}

pub fn format_endpoint(p: &Hyperreal) -> String {
    p.to_string()
}

/// Canonical text for a subset: intervals in normalized order, points as
/// `{p}`, proper intervals as `[lo,hi]`, joined by ` U `.
pub fn format_subset(s: &Subset) -> String {
    let parts: Vec<String> = s
        .intervals()
        .iter()
        .map(|iv| {
            if iv.is_point() {
                format!("{{{}}}", iv.lo())
            } else {
                format!("[{},{}]", iv.lo(), iv.hi())
            }
        })
        .collect();
    parts.join(" U ")
}

/// Canonical text for a triple: `(T;I;F)` with exact rationals throughout.
pub fn format_triple(t: &Triple) -> String {
    format!(
        "({};{};{})",
        format_subset(t.truth()),
        format_subset(t.indeterminacy()),
        format_subset(t.falsity())
    )
}
