//! Polynomial text format.
//!
//! Terms are joined by `+` / `-`; each term is an optional rational
//! coefficient (`3/2`) followed by variables `x1 .. xn`, e.g. `2 - x1 - x2`.
//! Factors may be separated by whitespace or `*`. Univariate and symmetrized
//! polynomials additionally use named variables with powers (`y^2`, `s t^3`).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{MultilinearPoly, Rational};
use crate::error::{Error, Result};

/// One factor of a parsed term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    /// `x<i>` with `i` 1-based in the text, stored 0-based.
    Indexed(usize),
    /// A named variable with a positive power, e.g. `y^2`.
    Named(String, u32),
}

/// A parsed term: coefficient and factors in source order.
pub type Term = (Rational, Vec<Factor>);

pub(crate) fn write_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (Rational, Vec<String>)>,
{
    let mut first = true;
    for (c, factors) in terms {
        let neg = c.is_negative();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let abs = c.abs();
        if factors.is_empty() {
            write!(f, "{abs}")?;
        } else {
            if !abs.is_one() {
                write!(f, "{abs} ")?;
            }
            write!(f, "{}", factors.join(" "))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }
}

/// Parses the generic term syntax shared by all polynomial kinds.
pub fn parse_terms(text: &str) -> Result<Vec<Term>> {
    let mut lx = Lexer {
        s: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut sign = Rational::one();
    match lx.peek() {
        Some(b'-') => {
            sign = -sign;
            lx.pos += 1;
        }
        Some(b'+') => lx.pos += 1,
        None => return Err(lx.err("empty polynomial")),
        _ => {}
    }
    loop {
        let mut coef = sign.clone();
        let mut factors = Vec::new();
        let mut any = false;
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = lx.digits().unwrap();
                    let mut value = Rational::from_integer(num.parse::<BigInt>().unwrap());
                    if lx.s.get(lx.pos) == Some(&b'/') {
                        lx.pos += 1;
                        let den = lx.digits().ok_or_else(|| lx.err("expected denominator"))?;
                        let den: BigInt = den.parse().unwrap();
                        if den.is_zero() {
                            return Err(lx.err("zero denominator"));
                        }
                        value /= Rational::from_integer(den);
                    }
                    coef *= value;
                    any = true;
                }
                Some(b'x') if lx.s.get(lx.pos + 1).is_some_and(|c| c.is_ascii_digit()) => {
                    lx.pos += 1;
                    let idx: usize = lx
                        .digits()
                        .unwrap()
                        .parse()
                        .map_err(|_| lx.err("bad variable index"))?;
                    if idx == 0 || idx > crate::limits::MAX_ARITY {
                        return Err(lx.err("variable index out of range"));
                    }
                    if lx.s.get(lx.pos) == Some(&b'^') {
                        return Err(lx.err("powers of x variables are not multilinear"));
                    }
                    factors.push(Factor::Indexed(idx - 1));
                    any = true;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let start = lx.pos;
                    while lx.pos < lx.s.len() && lx.s[lx.pos].is_ascii_alphabetic() {
                        lx.pos += 1;
                    }
                    let name = std::str::from_utf8(&lx.s[start..lx.pos]).unwrap().to_string();
                    let mut power = 1;
                    if lx.s.get(lx.pos) == Some(&b'^') {
                        lx.pos += 1;
                        power = lx
                            .digits()
                            .ok_or_else(|| lx.err("expected exponent"))?
                            .parse()
                            .map_err(|_| lx.err("bad exponent"))?;
                    }
                    if power > 0 {
                        factors.push(Factor::Named(name, power));
                    }
                    any = true;
                }
                Some(b'*') if any => {
                    lx.pos += 1;
                }
                _ => break,
            }
        }
        if !any {
            return Err(lx.err("expected term"));
        }
        terms.push((coef, factors));
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.pos += 1;
                sign = Rational::one();
            }
            Some(b'-') => {
                lx.pos += 1;
                sign = -Rational::one();
            }
            Some(_) => return Err(lx.err("unexpected character")),
        }
    }
    Ok(terms)
}

/// Parses a multilinear polynomial. With `arity = None` the arity is the
/// largest variable index used (at least 1).
pub fn parse_multilinear(text: &str, arity: Option<usize>) -> Result<MultilinearPoly> {
    let terms = parse_terms(text)?;
    let mut masks = Vec::with_capacity(terms.len());
    let mut max_var = 0;
    for (c, factors) in terms {
        let mut mask = 0u32;
        for f in factors {
            match f {
                Factor::Indexed(i) => {
                    if mask >> i & 1 == 1 {
                        return Err(Error::Parse(format!(
                            "variable x{} repeated within a monomial",
                            i + 1
                        )));
                    }
                    mask |= 1 << i;
                    max_var = max_var.max(i + 1);
                }
                Factor::Named(name, _) => {
                    return Err(Error::Parse(format!(
                        "unexpected variable '{name}' in a multilinear polynomial"
                    )))
                }
            }
        }
        masks.push((mask, c));
    }
    let n = match arity {
        Some(n) if n < max_var => {
            return Err(Error::IndexOutOfRange {
                index: max_var - 1,
                arity: n,
            })
        }
        Some(n) => n,
        None => max_var.max(1),
    };
    MultilinearPoly::from_terms(n, masks)
}

impl FromStr for MultilinearPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_multilinear(s, None)
    }
}
