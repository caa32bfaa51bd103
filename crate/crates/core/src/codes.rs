//! r-digit Hensel codes: rationals with `p`-free denominators represented as
//! residues modulo `p^r`, recovered by rational reconstruction.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{base_digits, fmt_rational, mod_inverse, residue, ExactRational, Prime};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HenselCode {
    p: Prime,
    r: u32,
    value: BigUint,
}

impl HenselCode {
    /// Wraps a residue; it is reduced modulo `p^r`.
    pub fn from_residue(value: BigUint, p: Prime, r: u32) -> Result<Self> {
        check_digits(r)?;
        let m = p.pow(r);
        Ok(HenselCode { p, r, value: value % m })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn digit_count(&self) -> u32 {
        self.r
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> BigUint {
        self.p.pow(self.r)
    }

    /// Exactly `r` base-`p` digits, least significant first.
    pub fn digits(&self) -> Vec<u64> {
        base_digits(&self.value, self.p, self.r as usize)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.p == other.p && self.r == other.r {
            Ok(())
        } else {
            Err(Error::Mismatch(format!(
                "codes over (p={}, r={}) and (p={}, r={})",
                self.p, self.r, other.p, other.r
            )))
        }
    }

    fn with_value(&self, value: BigUint) -> Self {
        HenselCode { p: self.p, r: self.r, value: value % self.modulus() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.with_value(&self.value + &other.value))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.with_value(&self.value + self.modulus() - &other.value))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.with_value(&self.value * &other.value))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let m = BigInt::from_biguint(Sign::Plus, self.modulus());
        let inv = mod_inverse(&BigInt::from(other.value.clone()), &m).ok_or_else(|| {
            Error::NotInvertible(format!("code {} (divisible by {})", other.value, self.p))
        })?;
        Ok(self.with_value(&self.value * inv.to_biguint().expect("non-negative")))
    }

    /// Largest numerator/denominator magnitude that decodes uniquely:
    /// `⌊√((p^r − 1)/2)⌋`.
    pub fn farey_bound(&self) -> BigUint {
        farey_bound(self.p, self.r)
    }
}

fn check_digits(r: u32) -> Result<()> {
    if r == 0 {
        Err(Error::Domain("a Hensel code needs at least one digit".into()))
    } else {
        Ok(())
    }
}

pub fn farey_bound(p: Prime, r: u32) -> BigUint {
    ((p.pow(r) - 1u32) / 2u32).sqrt()
}

/// `numerator · denominator⁻¹ mod p^r`.
pub fn encode(a: &ExactRational, p: Prime, r: u32) -> Result<HenselCode> {
    check_digits(r)?;
    let m = p.pow(r);
    let mi = BigInt::from_biguint(Sign::Plus, m.clone());
    let inv = mod_inverse(a.denom(), &mi)
        .ok_or_else(|| Error::NotEncodable(fmt_rational(a), p.get()))?;
    Ok(HenselCode { p, r, value: residue(&(a.numer() * inv), &m) })
}

/// Rational reconstruction: the unique `b/c` with `|b|, c ≤ N`, `p ∤ c` and
/// `b ≡ value·c (mod p^r)`, found by running the extended Euclidean algorithm
/// on `(p^r, value)` until the remainder drops to `N` or below.
pub fn decode(x: &HenselCode) -> Result<ExactRational> {
    let bound = BigInt::from(x.farey_bound());
    let fail = || Error::DecodeFailure { value: x.value.to_string(), bound: bound.to_string() };

    let (mut r0, mut r1) = (BigInt::from(x.modulus()), BigInt::from(x.value.clone()));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let (mut b, mut c) = (r1, t1);
    if c.is_negative() {
        b = -b;
        c = -c;
    }
    if c.is_zero() || c > bound || !b.gcd(&c).is_one() || c.is_multiple_of(&x.p.to_bigint()) {
        return Err(fail());
    }
    Ok(BigRational::new(b, c))
}

/// JSON shape `{p, r, value, digits}`.
#[derive(Debug, Serialize)]
pub struct CodeReport {
    pub p: u64,
    pub r: u32,
    pub value: String,
    pub digits: Vec<u64>,
}

impl From<&HenselCode> for CodeReport {
    fn from(c: &HenselCode) -> Self {
        CodeReport { p: c.p.get(), r: c.r, value: c.value.to_string(), digits: c.digits() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;

    fn q(s: &str) -> ExactRational {
        parse_rational(s).unwrap()
    }

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    #[test]
    fn encode_examples() {
        let c = encode(&q("1/3"), p5(), 4).unwrap();
        assert_eq!(c.value(), &BigUint::from(417u32));
        assert_eq!(c.digits(), vec![2, 3, 1, 3]);
        let two = encode(&q("2"), p5(), 4).unwrap();
        assert_eq!(two.digits(), vec![2, 0, 0, 0]);
        let m1 = encode(&q("-1"), p5(), 4).unwrap();
        assert_eq!(m1.value(), &BigUint::from(624u32));
        assert_eq!(m1.digits(), vec![4, 4, 4, 4]);
        assert!(matches!(encode(&q("1/10"), p5(), 4), Err(Error::NotEncodable(..))));
    }

    #[test]
    fn arithmetic_examples() {
        let third = encode(&q("1/3"), p5(), 4).unwrap();
        let two_thirds = encode(&q("2/3"), p5(), 4).unwrap();
        assert_eq!(two_thirds.value(), &BigUint::from(209u32));
        assert_eq!(third.add(&two_thirds).unwrap(), encode(&q("1"), p5(), 4).unwrap());
        let three = encode(&q("3"), p5(), 4).unwrap();
        assert_eq!(third.mul(&three).unwrap().value(), &BigUint::from(1u32));
        assert_eq!(third.sub(&third).unwrap(), encode(&q("0"), p5(), 4).unwrap());
        assert_eq!(third.div(&two_thirds).unwrap(), encode(&q("1/2"), p5(), 4).unwrap());
    }

    #[test]
    fn arithmetic_errors() {
        let a = encode(&q("1/3"), p5(), 4).unwrap();
        let b = encode(&q("1/3"), p5(), 5).unwrap();
        assert!(matches!(a.add(&b), Err(Error::Mismatch(_))));
        let five = encode(&q("5"), p5(), 4).unwrap();
        assert!(matches!(a.div(&five), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&encode(&q("1/3"), p5(), 4).unwrap()).unwrap(), q("1/3"));
        let c = encode(&q("-7/11"), p5(), 6).unwrap();
        assert_eq!(farey_bound(p5(), 6), BigUint::from(88u32));
        assert_eq!(decode(&c).unwrap(), q("-7/11"));
        let two = HenselCode::from_residue(BigUint::from(2u32), p5(), 4).unwrap();
        assert_eq!(decode(&two).unwrap(), q("2"));
    }

    #[test]
    fn decode_matches_brute_force_on_every_residue() {
        let (pr, r) = (p5(), 4);
        let n = 17i64;
        let mut failures = 0;
        for v in 0u32..625 {
            let code = HenselCode::from_residue(BigUint::from(v), pr, r).unwrap();
            let brute: Vec<ExactRational> = (1..=n)
                .filter(|c| c % 5 != 0)
                .flat_map(|c| (-n..=n).map(move |b| (b, c)))
                .filter(|&(b, c)| num_integer::gcd(b, c) == 1 && (b - v as i64 * c).rem_euclid(625) == 0)
                .map(|(b, c)| BigRational::new(b.into(), c.into()))
                .collect();
            assert!(brute.len() <= 1, "box representative must be unique");
            match decode(&code) {
                Ok(x) => assert_eq!(vec![x], brute),
                Err(Error::DecodeFailure { .. }) => {
                    assert!(brute.is_empty());
                    failures += 1;
                }
                Err(e) => panic!("{e}"),
            }
        }
        assert!(failures > 0);
    }
}
