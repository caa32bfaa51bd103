use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{rational_pow, split_prime_power, ExactRational, Prime};

/// A valuation: a finite (possibly negative) integer, or `+∞` for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinity)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinity) => Ordering::Less,
            (Valuation::Infinity, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinity, Valuation::Infinity) => Ordering::Equal,
        }
    }
}

/// `∞` absorbs.
impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

/// Serialized as an integer, or the string `"inf"`.
impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinity => s.serialize_str("inf"),
        }
    }
}

/// `ν_p(n)` for an integer.
pub fn nu_integer(n: &BigInt, p: Prime) -> Valuation {
    if n.is_zero() {
        Valuation::Infinity
    } else {
        Valuation::Finite(split_prime_power(n, p).0)
    }
}

/// `ν_p(a)`: the exponent `n` in `a = p^n b/c` with `p ∤ bc`.
pub fn nu(a: &ExactRational, p: Prime) -> Valuation {
    if a.is_zero() {
        return Valuation::Infinity;
    }
    let num = split_prime_power(a.numer(), p).0;
    let den = split_prime_power(a.denom(), p).0;
    Valuation::Finite(num - den)
}

/// Where an absolute value on the rationals lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RationalPlace {
    Prime(Prime),
    Infinity,
}

impl fmt::Display for RationalPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalPlace::Prime(p) => write!(f, "{p}"),
            RationalPlace::Infinity => f.write_str("inf"),
        }
    }
}

/// `|a|_p = p^{-ν_p(a)}` exactly, or the ordinary absolute value at `∞`.
pub fn norm(a: &ExactRational, place: RationalPlace) -> ExactRational {
    match place {
        RationalPlace::Infinity => a.abs(),
        RationalPlace::Prime(p) => match nu(a, p) {
            Valuation::Infinity => BigRational::zero(),
            Valuation::Finite(v) => rational_pow(p.get(), -v),
        },
    }
}
