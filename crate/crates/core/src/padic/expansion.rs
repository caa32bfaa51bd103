//! The comma notation for p-adic integers: `a₀,a₁a₂…a_k`.
//!
//! `216` is written `0,0011011` in base 2, `0,0022` in base 3 and `1,331` in
//! base 5: the first digit, a comma, then the remaining digits by ascending
//! power with trailing zeros dropped. Zero is `0,`. For `p > 10` the digits
//! after the comma are decimal numbers separated by apostrophes
//! (`7,8'1` for 216 in base 11).

use num_bigint::BigInt;

use super::number::PadicNumber;
use super::valuation::Valuation;
use crate::arith::{from_base_digits, Prime};
use crate::{Error, Result};

/// All digits of the plain expansion `a₀ + a₁p + …` up to the absolute
/// precision, trailing zeros removed.
fn plain_digits(x: &PadicNumber) -> Result<Vec<u64>> {
    let v = match x.valuation() {
        Valuation::Infinity => return Ok(Vec::new()),
        Valuation::Finite(v) if v < 0 => {
            return Err(Error::UnsupportedFormat(format!(
                "valuation {v} < 0 has no digit expansion in comma notation"
            )))
        }
        Valuation::Finite(v) => v as usize,
    };
    let mut digits = vec![0; v];
    digits.extend_from_slice(x.unit_digits());
    while digits.last() == Some(&0) {
        digits.pop();
    }
    Ok(digits)
}

pub fn to_expansion_string(x: &PadicNumber) -> Result<String> {
    let digits = plain_digits(x)?;
    let Some((first, rest)) = digits.split_first() else {
        return Ok("0,".to_string());
    };
    let tail: Vec<String> = rest.iter().map(u64::to_string).collect();
    let sep = if x.prime().get() <= 10 { "" } else { "'" };
    Ok(format!("{first},{}", tail.join(sep)))
}

pub fn parse_expansion_string(s: &str, p: Prime, r: usize) -> Result<PadicNumber> {
    let bad = |why: &str| Error::Parse(format!("invalid expansion `{s}`: {why}"));
    let (head, tail) = s.trim().split_once(',').ok_or_else(|| bad("missing comma"))?;
    let parse_digit = |t: &str| -> Result<u64> {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("digits must be decimal"));
        }
        let d: u64 = t.parse().map_err(|_| bad("digit too large"))?;
        if d >= p.get() {
            return Err(bad(&format!("digit {d} is not below p = {p}")));
        }
        Ok(d)
    };
    let mut digits = vec![parse_digit(head)?];
    if p.get() <= 10 {
        for c in tail.chars() {
            digits.push(parse_digit(c.encode_utf8(&mut [0; 4]))?);
        }
    } else if !tail.is_empty() {
        for t in tail.split('\'') {
            digits.push(parse_digit(t)?);
        }
    }
    let n = BigInt::from(from_base_digits(&digits, p));
    PadicNumber::from_integer(&n, p, r)
}
