//! Integer polynomials in one variable and their text grammar.
//!
//! ```text
//! poly  = [sign] term { sign term }
//! term  = int [ ["*"] "x" [ "^" int ] ] | "x" [ "^" int ]
//! sign  = "+" | "-"
//! ```
//!
//! Whitespace is ignored everywhere. Repeated powers are summed, so
//! `x + x` parses as `2x`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Polynomial with integer coefficients, `coeffs[i]` multiplying `x^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

const MAX_PARSED_DEGREE: usize = 4096;

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `f(x) mod m`, in `[0, m)`.
    pub fn eval_mod(&self, x: &BigInt, m: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::new(coeffs)
    }

    /// True when every coefficient is divisible by `m`.
    pub fn vanishes_mod(&self, m: &BigInt) -> bool {
        self.coeffs.iter().all(|c| c.mod_floor(m).is_zero())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_terms(s).map(|terms| {
            let deg = terms.iter().map(|(_, e)| *e).max().unwrap_or(0);
            let mut coeffs = vec![BigInt::zero(); deg + 1];
            for (c, e) in terms {
                coeffs[e] += c;
            }
            IntPolynomial::new(coeffs)
        })
    }
}

/// Parses the polynomial grammar into `(coefficient, exponent)` terms.
pub(crate) fn parse_terms(s: &str) -> Result<Vec<(BigInt, usize)>> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |why: &str| Error::Parse(format!("invalid polynomial `{s}`: {why}"));
    if chars.is_empty() {
        return Err(err("empty input"));
    }
    let digits = |pos: &mut usize| -> Option<String> {
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (*pos > start).then(|| chars[start..*pos].iter().collect())
    };

    let mut terms = Vec::new();
    let mut pos = 0;
    let mut first = true;
    while pos < chars.len() {
        let mut negative = false;
        match chars[pos] {
            '+' | '-' => {
                negative = chars[pos] == '-';
                pos += 1;
            }
            _ if !first => return Err(err("expected `+` or `-` between terms")),
            _ => {}
        }
        first = false;
        let coeff = digits(&mut pos);
        let mut has_star = false;
        if pos < chars.len() && chars[pos] == '*' {
            if coeff.is_none() {
                return Err(err("`*` must follow a coefficient"));
            }
            has_star = true;
            pos += 1;
        }
        let mut exp = 0usize;
        if pos < chars.len() && chars[pos] == 'x' {
            pos += 1;
            exp = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let e = digits(&mut pos).ok_or_else(|| err("missing exponent after `^`"))?;
                exp = e.parse().map_err(|_| err("exponent too large"))?;
                if exp > MAX_PARSED_DEGREE {
                    return Err(err("exponent too large"));
                }
            }
        } else if has_star || coeff.is_none() {
            return Err(err("expected `x`"));
        }
        let mut c = match coeff {
            Some(d) => d.parse::<BigInt>().map_err(|_| err("bad coefficient"))?,
            None => BigInt::one(),
        };
        if negative {
            c = -c;
        }
        terms.push((c, exp));
    }
    Ok(terms)
}
