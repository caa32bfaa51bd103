//! Integer and rational plumbing shared by the arithmetic modules.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

/// Largest prime accepted as a modulus; digits must fit in a machine word
/// and primality is settled by trial division.
pub const MAX_PRIME: u64 = (1 << 32) - 1;

/// A prime `p < 2^32`, verified by deterministic trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::ResourceLimit(format!(
                "prime {p} exceeds the supported bound 2^32"
            )));
        }
        if is_prime_trial(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }

    pub fn to_biguint(self) -> BigUint {
        BigUint::from(self.0)
    }

    /// `p^k` as an unsigned big integer.
    pub fn pow(self, k: u32) -> BigUint {
        num_traits::pow(self.to_biguint(), k as usize)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Prime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid prime `{s}`")))?;
        Prime::new(p)
    }
}

pub fn is_prime_trial(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits `n != 0` as `p^v * m` with `p` not dividing `m`.
pub fn split_prime_power(n: &BigInt, p: Prime) -> (i64, BigInt) {
    debug_assert!(!n.is_zero());
    let pb = p.to_bigint();
    let mut v = 0i64;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            break;
        }
        m = q;
        v += 1;
    }
    (v, m)
}

/// Inverse of `a` modulo `m` (`m > 1`), or `None` if `gcd(a, m) != 1`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Inverse modulo a small prime.
pub fn mod_inverse_u64(a: u64, p: u64) -> Option<u64> {
    mod_inverse(&BigInt::from(a), &BigInt::from(p)).and_then(|x| x.to_u64())
}

/// The `r` lowest base-`p` digits of `n`, least significant first.
pub fn base_digits(n: &BigUint, p: Prime, r: usize) -> Vec<u64> {
    let pb = p.to_biguint();
    let mut digits = Vec::with_capacity(r);
    let mut m = n.clone();
    for _ in 0..r {
        let (q, d) = m.div_rem(&pb);
        digits.push(d.to_u64().unwrap_or(0));
        m = q;
    }
    digits
}

/// Evaluates a little-endian base-`p` digit vector.
pub fn from_base_digits(digits: &[u64], p: Prime) -> BigUint {
    let pb = p.to_biguint();
    digits
        .iter()
        .rev()
        .fold(BigUint::zero(), |acc, &d| acc * &pb + BigUint::from(d))
}

/// Non-negative residue of a signed integer modulo `m`.
pub fn residue(n: &BigInt, m: &BigUint) -> BigUint {
    let mb = BigInt::from_biguint(Sign::Plus, m.clone());
    n.mod_floor(&mb).to_biguint().expect("mod_floor is non-negative")
}

/// Parses `[-]digits[/digits]`.
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let valid_int = |t: &str, allow_sign: bool| {
        let body = if allow_sign {
            t.strip_prefix('-').unwrap_or(t)
        } else {
            t
        };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) || !valid_int(den, false) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::ZeroArgument(format!("denominator of `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

pub fn parse_integer(s: &str) -> Result<BigInt> {
    let r = parse_rational(s)?;
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::Parse(format!("expected an integer, got `{s}`")))
    }
}

/// Renders a rational as `n` or `n/d`.
pub fn fmt_rational(q: &ExactRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `base^e` for a possibly negative exponent.
pub fn rational_pow(base: u64, e: i64) -> ExactRational {
    let b = num_traits::pow(BigInt::from(base), e.unsigned_abs() as usize);
    if e >= 0 {
        BigRational::from_integer(b)
    } else {
        BigRational::new(BigInt::one(), b)
    }
}
