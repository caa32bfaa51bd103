use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use num_bigint::{BigInt, Sign};
use num_traits::Zero;

use crate::arith::{parse_rational, ExactRational};
use crate::{Error, Result};

/// Binary floating point with [`PRECISION_BITS`] significant bits.
pub type Real = FBig<HalfEven, 2>;

/// About 38 significant decimal digits.
pub const PRECISION_BITS: usize = 128;

pub fn real_int(n: i64) -> Real {
    Real::from(n).with_precision(PRECISION_BITS).value()
}

pub fn real_from_bigint(n: &BigInt) -> Real {
    let (sign, digits) = n.to_u32_digits();
    let radix = real_int(1 << 32);
    let mag = digits.iter().rev().fold(real_int(0), |acc, &d| acc * &radix + real_int(d as i64));
    if sign == Sign::Minus {
        -mag
    } else {
        mag
    }
}

pub fn real_from_rational(q: &ExactRational) -> Real {
    real_from_bigint(q.numer()) / real_from_bigint(q.denom())
}

pub fn abs_real(x: Real) -> Real {
    if x < Real::ZERO {
        -x
    } else {
        x
    }
}

pub fn to_f64(x: &Real) -> f64 {
    x.to_f64().value()
}

/// Decimal rendering with `digits` significant digits.
pub fn fmt_real(x: &Real, digits: usize) -> String {
    if *x == Real::ZERO {
        return "0".into();
    }
    x.to_decimal().value().with_precision(digits).value().to_string()
}

/// Parses `[-]digits[.digits][e[-]digits]` or `[-]digits/digits` exactly.
pub fn parse_decimal(s: &str) -> Result<ExactRational> {
    let t = s.trim();
    if t.contains('/') {
        return parse_rational(t);
    }
    let bad = || Error::Parse(format!("invalid decimal `{s}`"));
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(k) => (&t[..k], t[k + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, mantissa),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || !(int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())) {
        return Err(bad());
    }
    if exp.unsigned_abs() > 4096 {
        return Err(Error::Range(format!("exponent in `{s}` is too large")));
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut q = if scale >= 0 {
        ExactRational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        ExactRational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        q = -q;
    }
    Ok(q)
}

pub(crate) fn is_positive(x: &ExactRational) -> bool {
    x > &ExactRational::zero()
}
