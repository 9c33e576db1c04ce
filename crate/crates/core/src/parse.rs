//! Polynomial input parsing.
//!
//! Two notations are accepted:
//!
//! * a comma-separated coefficient list, lowest degree first: `4,4,0,1`;
//! * a sparse expression in `z` (or `x`): `z^3 + 4z + 4`, `-2*z^2+z`, with
//!   optional `*`, implicit coefficient 1, and repeated powers summed.

use std::collections::BTreeMap;
use std::iter::Peekable;
use std::str::CharIndices;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Largest exponent accepted in sparse input.
const MAX_EXPONENT: usize = 100_000;

pub fn parse_poly(text: &str) -> Result<Polynomial> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    if trimmed.contains(',') {
        parse_list(trimmed)
    } else {
        parse_sparse(trimmed)
    }
}

fn parse_list(text: &str) -> Result<Polynomial> {
    let coeffs = text
        .split(',')
        .enumerate()
        .map(|(i, tok)| {
            let tok = tok.trim();
            let digits = tok.strip_prefix('+').unwrap_or(tok);
            if digits.is_empty() {
                return Err(Error::Parse(format!("empty coefficient at position {i}")));
            }
            digits
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("malformed coefficient `{tok}` at position {i}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

struct Lexer<'a> {
    text: &'a str,
    chars: Peekable<CharIndices<'a>>,
    var: Option<char>,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.chars.peek().map_or(false, |(_, c)| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn number(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let &(start, c) = self.chars.peek()?;
        if !c.is_ascii_digit() {
            return None;
        }
        let mut end = start;
        while let Some(&(i, c)) = self.chars.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            end = i + c.len_utf8();
            self.chars.next();
        }
        Some(&self.text[start..end])
    }

    fn error(&mut self, what: &str) -> Error {
        self.skip_ws();
        match self.chars.peek() {
            Some(&(i, c)) => Error::Parse(format!("{what}: unexpected `{c}` at offset {i}")),
            None => Error::Parse(format!("{what}: unexpected end of input")),
        }
    }
}

fn parse_sparse(text: &str) -> Result<Polynomial> {
    let mut lx = Lexer {
        text,
        chars: text.char_indices().peekable(),
        var: None,
    };
    let mut terms: BTreeMap<usize, BigInt> = BTreeMap::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match lx.peek() {
            Some('+') if !first => {
                lx.chars.next();
            }
            Some('-') => {
                lx.chars.next();
                negative = true;
            }
            Some('+') => {
                lx.chars.next();
            }
            None if first => return Err(Error::Parse("empty input".into())),
            _ if !first => return Err(lx.error("expected `+` or `-` between terms")),
            _ => {}
        }
        let (coeff, power) = parse_term(&mut lx)?;
        let coeff = if negative { -coeff } else { coeff };
        *terms.entry(power).or_insert_with(BigInt::zero) += coeff;
        first = false;
        if lx.peek().is_none() {
            break;
        }
    }
    let degree = terms.keys().next_back().copied().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    for (power, c) in terms {
        coeffs[power] = c;
    }
    Ok(Polynomial::new(coeffs))
}

fn parse_term(lx: &mut Lexer<'_>) -> Result<(BigInt, usize)> {
    let coeff = match lx.number() {
        Some(digits) => Some(digits.parse::<BigInt>().expect("digits")),
        None => None,
    };
    if coeff.is_some() && lx.peek() == Some('*') {
        lx.chars.next();
        if !matches!(lx.peek(), Some('z' | 'x')) {
            return Err(lx.error("expected variable after `*`"));
        }
    }
    let power = match lx.peek() {
        Some(c @ ('z' | 'x')) => {
            lx.chars.next();
            match lx.var {
                Some(v) if v != c => {
                    return Err(Error::Parse(format!(
                        "mixed variables `{v}` and `{c}`"
                    )))
                }
                _ => lx.var = Some(c),
            }
            if lx.peek() == Some('^') {
                lx.chars.next();
                let digits = lx.number().ok_or_else(|| lx.error("expected exponent after `^`"))?;
                let e: usize = digits
                    .parse()
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| Error::Parse(format!("exponent `{digits}` too large")))?;
                e
            } else {
                1
            }
        }
        _ => {
            if coeff.is_none() {
                return Err(lx.error("expected a coefficient or variable"));
            }
            0
        }
    };
    Ok((coeff.unwrap_or_else(BigInt::one), power))
}
