//! Text grammars for polynomials, coefficient lists, spectra and interval bounds.
//!
//! Polynomials are signed sums of `c`, `c x`, `c*x`, `c x^k` and `x^k` with `c`
//! an integer or `p/q`. Whitespace is ignored, terms may come in any order and
//! repeated powers are summed.

use std::fmt;

use num_traits::Zero;
use polystab::{Bound, GaussianRational, Rational, RationalPolynomial};

const MAX_EXPONENT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// byte offset into the input
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: Option<char>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: expected {}", self.offset, self.expected.join(" or "))?;
        match self.found {
            Some(c) => write!(f, ", found '{c}'"),
            None => write!(f, ", found end of input"),
        }
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.pos,
            expected: expected.to_vec(),
            found: self.peek(),
        }
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat('+') {
            Some(false)
        } else if self.eat('-') {
            Some(true)
        } else {
            None
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some('0'..='9')) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.text[start..self.pos])
    }

    fn starts_number(&mut self) -> bool {
        self.skip_ws();
        matches!(self.peek(), Some('0'..='9'))
    }

    /// `digits ('/' digits)?`
    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.digits().ok_or_else(|| self.error(&["number"]))?;
        let num: Rational = num.parse().expect("digit string");
        if !self.eat('/') {
            return Ok(num);
        }
        let before = {
            self.skip_ws();
            self.pos
        };
        let den = self.digits().ok_or_else(|| self.error(&["denominator"]))?;
        let den: Rational = den.parse().expect("digit string");
        if den.is_zero() {
            return Err(ParseError {
                offset: before,
                expected: vec!["nonzero denominator"],
                found: Some('0'),
            });
        }
        Ok(num / den)
    }

    fn signed_rational(&mut self) -> Result<Rational, ParseError> {
        let negative = self.sign().unwrap_or(false);
        if !self.starts_number() {
            return Err(self.error(&["number"]));
        }
        let r = self.rational()?;
        Ok(if negative { -r } else { r })
    }

    /// `'x' ('^' digits)?`, with the `x` already consumed.
    fn power(&mut self) -> Result<usize, ParseError> {
        if !self.eat('^') {
            return Ok(1);
        }
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits().ok_or_else(|| self.error(&["exponent"]))?;
        match digits.parse::<usize>() {
            Ok(k) if k <= MAX_EXPONENT => Ok(k),
            _ => Err(ParseError {
                offset: start,
                expected: vec!["exponent at most 4096"],
                found: digits.chars().next(),
            }),
        }
    }

    fn term(&mut self) -> Result<(Rational, usize), ParseError> {
        if self.eat('x') {
            return Ok((Rational::from_integer(1.into()), self.power()?));
        }
        if !self.starts_number() {
            return Err(self.error(&["number", "'x'"]));
        }
        let c = self.rational()?;
        let starred = self.eat('*');
        if self.eat('x') {
            return Ok((c, self.power()?));
        }
        if starred {
            return Err(self.error(&["'x'"]));
        }
        Ok((c, 0))
    }
}

pub fn parse_polynomial(text: &str) -> Result<RationalPolynomial, ParseError> {
    let mut cur = Cursor::new(text);
    let mut terms: Vec<(Rational, usize)> = Vec::new();
    let mut negative = cur.sign().unwrap_or(false);
    loop {
        let (c, k) = cur.term()?;
        terms.push((if negative { -c } else { c }, k));
        if cur.at_end() {
            break;
        }
        negative = match cur.sign() {
            Some(n) => n,
            None => return Err(cur.error(&["'+'", "'-'", "end of input"])),
        };
    }
    let degree = terms.iter().map(|(_, k)| *k).max().unwrap_or(0);
    let mut ascending = vec![Rational::zero(); degree + 1];
    for (c, k) in terms {
        ascending[k] += c;
    }
    Ok(RationalPolynomial::from_ascending(ascending))
}

/// Comma-separated rationals, highest power first.
pub fn parse_coefficients(text: &str) -> Result<RationalPolynomial, ParseError> {
    let mut cur = Cursor::new(text);
    let mut coeffs = Vec::new();
    loop {
        coeffs.push(cur.signed_rational()?);
        if cur.at_end() {
            break;
        }
        if !cur.eat(',') {
            return Err(cur.error(&["','", "end of input"]));
        }
    }
    Ok(RationalPolynomial::new(coeffs))
}

/// Comma-separated `a`, `a+bi`, `a-bi`, `bi` or `i` with rational `a`, `b`.
pub fn parse_spectrum(text: &str) -> Result<Vec<GaussianRational>, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    loop {
        out.push(complex(&mut cur)?);
        if cur.at_end() {
            break;
        }
        if !cur.eat(',') {
            return Err(cur.error(&["','", "end of input"]));
        }
    }
    Ok(out)
}

fn complex(cur: &mut Cursor<'_>) -> Result<GaussianRational, ParseError> {
    let one = || Rational::from_integer(1.into());
    let negative = cur.sign().unwrap_or(false);
    let apply = |r: Rational, neg: bool| if neg { -r } else { r };
    if cur.eat('i') {
        return Ok(GaussianRational::new(Rational::zero(), apply(one(), negative)));
    }
    if !cur.starts_number() {
        return Err(cur.error(&["number", "'i'"]));
    }
    let first = apply(cur.rational()?, negative);
    if cur.eat('i') {
        return Ok(GaussianRational::new(Rational::zero(), first));
    }
    let Some(neg_im) = cur.sign() else {
        return Ok(GaussianRational::real(first));
    };
    let im = if cur.eat('i') {
        one()
    } else {
        if !cur.starts_number() {
            return Err(cur.error(&["number", "'i'"]));
        }
        let b = cur.rational()?;
        if !cur.eat('i') {
            return Err(cur.error(&["'i'"]));
        }
        b
    };
    Ok(GaussianRational::new(first, apply(im, neg_im)))
}

/// `-inf`, `inf`, `+inf` or a signed rational.
pub fn parse_bound(text: &str) -> Result<Bound, ParseError> {
    match text.trim() {
        "-inf" => return Ok(Bound::NegInf),
        "inf" | "+inf" => return Ok(Bound::PosInf),
        _ => {}
    }
    let mut cur = Cursor::new(text);
    let value = cur.signed_rational().map_err(|mut e| {
        e.expected.push("'inf'");
        e
    })?;
    if !cur.at_end() {
        return Err(cur.error(&["end of input"]));
    }
    Ok(Bound::Finite(value))
}
