//! Recursive-descent parser for polynomial strings.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := 'z' uint | 'w' | rational | 'i' | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! Multiplication must be written out: `2z1` is rejected.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::coeff::GaussianRational;
use crate::poly::Polynomial;

/// Exponents above this are rejected as overflow.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column in the source string.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    nvars: usize,
    _src: &'a str,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn err<T>(&self, at: usize, message: impl Into<String>) -> PResult<T> {
        Err(ParseError { column: at + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, self.chars[start..self.pos].iter().collect()))
    }

    fn uint(&mut self, what: &str) -> PResult<(usize, String)> {
        match self.digits() {
            Some(d) => Ok(d),
            None => self.err(self.pos, format!("expected {what}")),
        }
    }

    fn expr(&mut self) -> PResult<Polynomial> {
        let negate = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> PResult<Polynomial> {
        let base = self.base()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let (at, digits) = self.uint("exponent")?;
        match digits.parse::<u32>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
            _ => self.err(at, format!("exponent overflow: {digits} exceeds {MAX_EXPONENT}")),
        }
    }

    fn base(&mut self) -> PResult<Polynomial> {
        let n = self.nvars;
        let at = self.pos;
        match self.peek() {
            Some('z') => {
                self.pos += 1;
                let at_idx = self.pos;
                if !self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                    return self.err(at_idx, "expected variable index after 'z'");
                }
                let (_, digits) = self.uint("variable index")?;
                match digits.parse::<usize>() {
                    Ok(k) if (1..=n).contains(&k) => Ok(Polynomial::var(n, k - 1)),
                    _ => self.err(at_idx, format!("variable z{digits} out of range z1..z{n}")),
                }
            }
            Some('w') => self.err(self.pos, "'w' is not allowed: F depends on z1..zn only"),
            Some('i') => {
                self.pos += 1;
                Ok(Polynomial::constant(n, GaussianRational::i()))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err(self.pos, "expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let (_, num) = self.uint("integer")?;
                let numer: BigInt = num.parse().unwrap();
                let mut value = BigRational::from_integer(numer);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let (dat, den) = self.uint("denominator")?;
                    let den: BigInt = den.parse().unwrap();
                    if den.is_zero() {
                        return self.err(dat, "zero denominator");
                    }
                    value /= BigRational::from_integer(den);
                }
                Ok(Polynomial::constant(n, GaussianRational::new(value, BigRational::zero())))
            }
            Some(c) => self.err(self.pos, format!("unexpected '{c}'")),
            None => self.err(at.max(self.pos), "unexpected end of input"),
        }
    }
}

/// Parses `src` as a polynomial in `z1..zn`.
pub fn parse_polynomial(src: &str, n: usize) -> Result<Polynomial, ParseError> {
    let mut p = Parser { chars: src.chars().collect(), pos: 0, nvars: n, _src: src };
    let out = p.expr()?;
    if let Some(c) = p.peek() {
        return p.err(p.pos, format!("unexpected '{c}'"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::GaussianRational as C;

    fn z(i: usize) -> Polynomial {
        Polynomial::var(2, i)
    }

    #[test]
    fn basic_forms() {
        assert_eq!(parse_polynomial("z1^2", 2).unwrap(), z(0).pow(2));
        let f2 = parse_polynomial("z2^3 + z2*z1^3", 2).unwrap();
        assert_eq!(f2, &z(1).pow(3) + &(&z(1) * &z(0).pow(3)));
        let g = parse_polynomial("(1+i)*z1 - i*z2", 2).unwrap();
        let want = &z(0).scale(&C::from_parts((1, 1), (1, 1))) - &z(1).scale(&C::i());
        assert_eq!(g, want);
    }

    #[test]
    fn rationals_and_signs() {
        let p = parse_polynomial("-1/2*z1 + 3/4", 1).unwrap();
        let want = &Polynomial::var(1, 0).scale(&C::from_ratio(-1, 2)) + &Polynomial::constant(1, C::from_ratio(3, 4));
        assert_eq!(p, want);
        assert_eq!(parse_polynomial("(-z1)^2", 1).unwrap(), Polynomial::var(1, 0).pow(2));
    }

    #[test]
    fn errors_carry_columns() {
        assert_eq!(parse_polynomial("z3", 2).unwrap_err().column, 2);
        assert_eq!(parse_polynomial("2z1", 2).unwrap_err().column, 2);
        assert!(parse_polynomial("z1^99999999999", 2).unwrap_err().message.contains("overflow"));
        assert!(parse_polynomial("w + z1", 2).is_err());
        assert!(parse_polynomial("z1 +", 2).is_err());
        assert!(parse_polynomial("(z1", 2).is_err());
        assert!(parse_polynomial("1/0", 2).is_err());
        assert!(parse_polynomial("z", 2).is_err());
        assert!(parse_polynomial("z0", 2).is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["-z2^3 + i*z1 + 2", "(1+i)*z1", "-1/2*z1^2*z2 - (2-3/5*i)*z2 + 1/7", "-i"] {
            let p = parse_polynomial(s, 2).unwrap();
            assert_eq!(parse_polynomial(&p.to_string(), 2).unwrap(), p, "{s}");
        }
    }
}
