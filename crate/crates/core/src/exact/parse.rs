//! Expression grammar for radical values, shared by diagram files, matrix
//! dumps and the CLI:
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := rational | rational? 'sqrt(' posint ')' | 'cos(pi/5)'
//! rational := int ('/' posint)?
//! ```
//!
//! Printing emits the same grammar with terms sorted by radicand. A unary
//! minus directly before `sqrt(...)` or `cos(pi/5)` is accepted on input so
//! that printed sums like `-sqrt(3)` re-parse.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::RadicalNumber;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid expression at byte {position}: {message}")]
pub struct ExprParseError {
    pub position: usize,
    pub message: String,
}

struct Scanner<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { src, pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> ExprParseError {
        ExprParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<u64, ExprParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error("integer literal too large"))
    }

    /// rational := int ('/' posint)?  (sign handled by the caller)
    fn rational(&mut self) -> Result<BigRational, ExprParseError> {
        let num = self.digits()?;
        let mut den = 1u64;
        if self.peek() == Some('/') {
            self.pos += 1;
            den = self.digits()?;
            if den == 0 {
                return Err(self.error("zero denominator"));
            }
        }
        Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn sqrt_body(&mut self) -> Result<u64, ExprParseError> {
        let n = self.digits()?;
        if n == 0 {
            return Err(self.error("radicand must be positive"));
        }
        if !self.eat(")") {
            return Err(self.error("expected ')'"));
        }
        Ok(n)
    }

    /// One term, with `negative` carrying the pending sign.
    fn term(&mut self, negative: bool) -> Result<RadicalNumber, ExprParseError> {
        self.skip_ws();
        let value = if self.eat("cos(pi/5)") {
            super::cos_pi_over(5).expect("5 is supported")
        } else if self.eat("sqrt(") {
            let n = self.sqrt_body()?;
            RadicalNumber::sqrt_integer(n)
        } else if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let q = self.rational()?;
            if self.eat("sqrt(") {
                let n = self.sqrt_body()?;
                RadicalNumber::from_rational(q) * RadicalNumber::sqrt_integer(n)
            } else {
                RadicalNumber::from_rational(q)
            }
        } else {
            return Err(self.error("expected a term"));
        };
        Ok(if negative { -value } else { value })
    }

    fn expr(&mut self) -> Result<RadicalNumber, ExprParseError> {
        self.skip_ws();
        let leading_minus = self.eat("-");
        let mut acc = self.term(leading_minus)?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term(false)?;
                    acc += &t;
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term(true)?;
                    acc += &t;
                }
                None => return Ok(acc),
                Some(c) => return Err(self.error(format!("unexpected character '{c}'"))),
            }
        }
    }
}

impl FromStr for RadicalNumber {
    type Err = ExprParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scanner::new(s).expr()
    }
}

impl fmt::Display for RadicalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (n, q)) in self.terms().enumerate() {
            let neg = q.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let a = q.abs();
            if n == 1 {
                write_ratio(f, &a)?;
            } else {
                if !a.is_one() {
                    write_ratio(f, &a)?;
                }
                write!(f, "sqrt({n})")?;
            }
        }
        Ok(())
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}
