//! Textual grammar for Laurent polynomials.
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := integer ['*' factor ...] | [integer '*'] factor ('*'? factor)*
//! factor := 'u' index ['^' signed-integer]
//! ```
//!
//! Whitespace is insignificant. Variables are `u1..ud` only; the dimension is
//! inferred as the largest index used (at least 1) unless a larger dimension
//! is declared explicitly. The `*` between juxtaposed factors is optional on
//! input; the formatter always emits it. `format_poly` followed by
//! `parse_poly` is the identity.
//!
//! Batch files are UTF-8, one polynomial per line; `#` starts a comment and
//! blank lines are ignored.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::laurent::{LaurentPoly, Monomial, DEFAULT_EXPONENT_LIMIT};

/// Highest variable index accepted by the parser. Keeps exponent vectors at
/// a sane size; the analyses in this crate are practical for d <= 3 anyway.
pub const MAX_VARIABLE_INDEX: usize = 64;

/// A polynomial source string with an optional declared dimension
/// (for embedding, e.g., a d=1 polynomial into d=2).
#[derive(Clone, Debug)]
pub struct PolySource {
    pub text: String,
    pub declared_dim: Option<usize>,
}

impl PolySource {
    pub fn new(text: impl Into<String>) -> Self {
        PolySource {
            text: text.into(),
            declared_dim: None,
        }
    }

    pub fn with_dim(text: impl Into<String>, dim: usize) -> Self {
        PolySource {
            text: text.into(),
            declared_dim: Some(dim),
        }
    }

    pub fn parse(&self) -> Result<LaurentPoly, ParseError> {
        parse_poly(&self.text, self.declared_dim)
    }
}

/// Syntax or dimension error, with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            Some((start, std::str::from_utf8(&self.src[start..self.pos]).unwrap()))
        }
    }
}

struct RawTerm {
    coeff: BigInt,
    /// (variable index 1-based, exponent) factors in source order.
    factors: Vec<(usize, i64)>,
}

/// Parse a polynomial, inferring the dimension from the largest variable
/// index used unless `declared_dim` is given (it must cover every index).
pub fn parse_poly(text: &str, declared_dim: Option<usize>) -> Result<LaurentPoly, ParseError> {
    let mut sc = Scanner::new(text);
    let mut terms: Vec<(BigInt, Vec<(usize, i64)>)> = Vec::new();
    let mut max_index = 0usize;
    let mut max_index_pos = 0usize;

    let mut sign: i8 = 1;
    if sc.eat(b'-') {
        sign = -1;
    }
    loop {
        let term = parse_term(&mut sc)?;
        for &(idx, _) in &term.factors {
            if idx > max_index {
                max_index = idx;
                max_index_pos = sc.pos;
            }
        }
        let coeff = if sign < 0 { -term.coeff } else { term.coeff };
        terms.push((coeff, term.factors));

        match sc.peek() {
            Some(b'+') => {
                sc.bump();
                sign = 1;
            }
            Some(b'-') => {
                sc.bump();
                sign = -1;
            }
            Some(c) => {
                return Err(ParseError::new(
                    sc.pos,
                    format!("expected '+', '-' or end of input, found '{}'", c as char),
                ));
            }
            None => break,
        }
    }

    let dim = match declared_dim {
        Some(d) => {
            if d < max_index {
                return Err(ParseError::new(
                    max_index_pos,
                    format!("declared dimension {d} is smaller than variable index {max_index}"),
                ));
            }
            if d == 0 {
                return Err(ParseError::new(0, "declared dimension must be positive"));
            }
            d
        }
        None => max_index.max(1),
    };

    let mut raw = Vec::with_capacity(terms.len());
    for (coeff, factors) in terms {
        let mut exps = vec![0i64; dim];
        for (idx, e) in factors {
            exps[idx - 1] += e;
        }
        raw.push((Monomial::new(exps), coeff));
    }
    LaurentPoly::from_terms(dim, raw)
        .map_err(|e| ParseError::new(text.len(), e.to_string()))
}

fn parse_term(sc: &mut Scanner) -> Result<RawTerm, ParseError> {
    let mut coeff: Option<BigInt> = None;
    let mut factors = Vec::new();

    match sc.peek() {
        Some(c) if c.is_ascii_digit() => {
            let (_, digits) = sc.digits().unwrap();
            coeff = Some(digits.parse().unwrap());
            // optional '*' before a factor list
            let saved = sc.pos;
            if sc.eat(b'*') && sc.peek() != Some(b'u') {
                return Err(ParseError::new(sc.pos, "expected variable after '*'"));
            }
            if sc.peek() != Some(b'u') {
                sc.pos = saved;
            }
        }
        Some(b'u') => {}
        Some(c) => {
            return Err(ParseError::new(
                sc.pos,
                format!("expected a term, found '{}'", c as char),
            ));
        }
        None => return Err(ParseError::new(sc.pos, "expected a term, found end of input")),
    }

    while sc.peek() == Some(b'u') {
        sc.bump();
        let (dpos, digits) = sc
            .digits()
            .ok_or_else(|| ParseError::new(sc.pos, "expected variable index after 'u'"))?;
        let index: usize = digits
            .parse()
            .map_err(|_| ParseError::new(dpos, "variable index out of range"))?;
        if index == 0 {
            return Err(ParseError::new(dpos, "variable index must be at least 1"));
        }
        if index > MAX_VARIABLE_INDEX {
            return Err(ParseError::new(
                dpos,
                format!("variable index {index} exceeds the maximum {MAX_VARIABLE_INDEX}"),
            ));
        }
        let mut exp: i64 = 1;
        if sc.eat(b'^') {
            let negative = sc.eat(b'-');
            let positive = !negative && sc.eat(b'+');
            let _ = positive;
            let (epos, digits) = sc
                .digits()
                .ok_or_else(|| ParseError::new(sc.pos, "expected exponent after '^'"))?;
            let mag: i64 = digits
                .parse()
                .map_err(|_| ParseError::new(epos, "exponent out of range"))?;
            if mag > DEFAULT_EXPONENT_LIMIT {
                return Err(ParseError::new(
                    epos,
                    format!("exponent {mag} exceeds the limit {DEFAULT_EXPONENT_LIMIT}"),
                ));
            }
            exp = if negative { -mag } else { mag };
        }
        factors.push((index, exp));
        // optional '*' between factors
        let saved = sc.pos;
        if sc.eat(b'*') {
            if sc.peek() != Some(b'u') {
                sc.pos = saved;
                break;
            }
        }
    }

    if factors.is_empty() && coeff.is_none() {
        return Err(ParseError::new(sc.pos, "empty term"));
    }
    Ok(RawTerm {
        coeff: coeff.unwrap_or_else(|| BigInt::from(1)),
        factors,
    })
}

/// Canonical textual form: terms in canonical order, explicit `*` between
/// coefficient and variables and between variables, `^` only for exponents
/// other than 1. The zero polynomial prints as `0`.
pub fn format_poly(f: &LaurentPoly) -> String {
    use num_traits::One;

    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in f.terms().enumerate() {
        let negative = c < &BigInt::zero();
        let mag = if negative { -c.clone() } else { c.clone() };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }

        let mut factors = Vec::new();
        for (var, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                factors.push(format!("u{}", var + 1));
            } else {
                factors.push(format!("u{}^{}", var + 1, e));
            }
        }
        if factors.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&factors.join("*"));
        } else {
            out.push_str(&mag.to_string());
            out.push('*');
            out.push_str(&factors.join("*"));
        }
    }
    out
}

/// Iterate the meaningful lines of a batch file: `(1-based line number, text)`
/// with comments (from `#`) stripped and blank lines skipped.
pub fn batch_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = match line.find('#') {
            Some(p) => &line[..p],
            None => line,
        };
        let line = line.trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}
