//! The plain-text polynomial format used in reports and audit files.
//!
//! Terms look like `-3*x1^2*x3`, variables are `x1`, `x2`, ..., exponents
//! use `^`, multiplication is always explicit. Printing and parsing
//! round-trip exactly.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

use super::{Monomial, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty polynomial text")]
    Empty,
    #[error("unexpected character {found:?} at byte {at}")]
    UnexpectedChar { found: char, at: usize },
    #[error("variable index {index} out of range (ambient has {nvars} variables)")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("malformed number at byte {at}")]
    BadNumber { at: usize },
    #[error("division by zero in coefficient at byte {at}")]
    ZeroDenominator { at: usize },
}

pub(crate) fn write_polynomial(f: &mut fmt::Formatter<'_>, p: &Polynomial) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    // descending grevlex, leading term first
    let mut first = true;
    for (m, c) in p.terms().collect::<Vec<_>>().into_iter().rev() {
        let negative = c.is_negative();
        let abs = c.abs();
        if first {
            if negative {
                write!(f, "-")?;
            }
            first = false;
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        write_term(f, m, &abs)?;
    }
    Ok(())
}

fn write_term(f: &mut fmt::Formatter<'_>, m: &Monomial, abs_coeff: &BigRational) -> fmt::Result {
    let mut wrote_factor = false;
    if !abs_coeff.is_one() || m.is_one() {
        if abs_coeff.denom().is_one() {
            write!(f, "{}", abs_coeff.numer())?;
        } else {
            write!(f, "{}/{}", abs_coeff.numer(), abs_coeff.denom())?;
        }
        wrote_factor = true;
    }
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if wrote_factor {
            write!(f, "*")?;
        }
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
        wrote_factor = true;
    }
    Ok(())
}

/// Render with custom variable names (used when a 3-variable ring keeps
/// the original `x1,x3,x4` labels of the ambient 4-variable ring).
pub fn display_with_names(p: &Polynomial, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (m, c) in p.terms().collect::<Vec<_>>().into_iter().rev() {
        let negative = c.is_negative();
        let abs = c.abs();
        if first {
            if negative {
                out.push('-');
            }
            first = false;
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mut wrote_factor = false;
        if !abs.is_one() || m.is_one() {
            if abs.denom().is_one() {
                out.push_str(&abs.numer().to_string());
            } else {
                out.push_str(&format!("{}/{}", abs.numer(), abs.denom()));
            }
            wrote_factor = true;
        }
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote_factor {
                out.push('*');
            }
            out.push_str(&names[i]);
            if e > 1 {
                out.push_str(&format!("^{e}"));
            }
            wrote_factor = true;
        }
    }
    out
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner { bytes: s.as_bytes(), pos: 0 }
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

    fn read_uint(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::BadNumber { at: start });
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<BigInt>()
            .map_err(|_| ParseError::BadNumber { at: start })
    }
}

/// Parse the text format into a polynomial over `nvars` variables.
pub fn parse_polynomial(input: &str, nvars: usize) -> Result<Polynomial, ParseError> {
    let mut scan = Scanner::new(input);
    scan.skip_ws();
    if scan.peek().is_none() {
        return Err(ParseError::Empty);
    }
    let mut poly = Polynomial::zero(nvars);
    let mut first = true;
    loop {
        scan.skip_ws();
        let mut sign = 1i32;
        match scan.peek() {
            Some(b'+') => {
                scan.bump();
            }
            Some(b'-') => {
                sign = -1;
                scan.bump();
            }
            None if !first => break,
            None => return Err(ParseError::Empty),
            _ if first => {}
            Some(other) => {
                return Err(ParseError::UnexpectedChar { found: other as char, at: scan.pos })
            }
        }
        first = false;
        let term = parse_term(&mut scan, nvars)?;
        let signed = if sign < 0 { term.neg() } else { term };
        poly = poly.add(&signed).expect("same ambient");
        scan.skip_ws();
        match scan.peek() {
            None => break,
            Some(b'+') | Some(b'-') => continue,
            Some(other) => {
                return Err(ParseError::UnexpectedChar { found: other as char, at: scan.pos })
            }
        }
    }
    Ok(poly)
}

fn parse_term(scan: &mut Scanner<'_>, nvars: usize) -> Result<Polynomial, ParseError> {
    scan.skip_ws();
    let mut coeff = BigRational::one();
    let mut exps = vec![0u32; nvars];
    loop {
        scan.skip_ws();
        match scan.peek() {
            Some(b) if b.is_ascii_digit() => {
                let at = scan.pos;
                let numer = scan.read_uint()?;
                let mut value = BigRational::from_integer(numer);
                if scan.peek() == Some(b'/') {
                    scan.bump();
                    let denom = scan.read_uint()?;
                    if denom.is_zero() {
                        return Err(ParseError::ZeroDenominator { at });
                    }
                    value /= BigRational::from_integer(denom);
                }
                coeff *= value;

            }
            Some(b'x') => {
                scan.bump();
                let at = scan.pos;
                let idx_big = scan.read_uint()?;
                let index: usize = idx_big
                    .to_string()
                    .parse()
                    .map_err(|_| ParseError::BadNumber { at })?;
                if index == 0 || index > nvars {
                    return Err(ParseError::VariableOutOfRange { index, nvars });
                }
                let mut exp = 1u32;
                if scan.peek() == Some(b'^') {
                    scan.bump();
                    let at = scan.pos;
                    let e = scan.read_uint()?;
                    exp = e
                        .to_string()
                        .parse()
                        .map_err(|_| ParseError::BadNumber { at })?;
                }
                exps[index - 1] += exp;

            }
            Some(other) => {
                return Err(ParseError::UnexpectedChar { found: other as char, at: scan.pos })
            }
            None => return Err(ParseError::Empty),
        }
        scan.skip_ws();
        if scan.peek() == Some(b'*') {
            scan.bump();
            continue;
        }
        break;
    }
    Ok(Polynomial::from_term(Monomial::new(exps), coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn print_then_parse_is_identity() {
        let n = 4;
        let f = Polynomial::monomial(n, &[(0, 5)])
            .sub(&Polynomial::monomial(n, &[(2, 1), (3, 1)]))
            .unwrap();
        let text = f.to_string();
        assert_eq!(text, "x1^5 - x3*x4");
        assert_eq!(parse_polynomial(&text, n).unwrap(), f);
    }

    #[test]
    fn parse_coefficients_and_rationals() {
        let n = 3;
        let f = parse_polynomial("-3*x1^2*x3 + 1/2*x2 - 7", n).unwrap();
        assert_eq!(f.num_terms(), 3);
        assert_eq!(parse_polynomial(&f.to_string(), n).unwrap(), f);
        assert_eq!(parse_polynomial("0", n).unwrap(), Polynomial::zero(n));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_polynomial("", 3).is_err());
        assert!(parse_polynomial("x5", 3).is_err());
        assert!(parse_polynomial("x1 & x2", 3).is_err());
        assert!(parse_polynomial("1/0", 3).is_err());
    }
}
