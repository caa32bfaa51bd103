use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Trial division bound for integers that do not fit in a machine word.
pub const TRIAL_DIVISION_LIMIT: u64 = 10_000_000;

/// `sign · ∏ p^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    pub sign: i8,
    pub factors: BTreeMap<u64, u32>,
}

impl PrimeFactorization {
    pub fn to_integer(&self) -> BigInt {
        let mag = self
            .factors
            .iter()
            .fold(BigInt::one(), |acc, (&p, &e)| acc * num_traits::pow(BigInt::from(p), e as usize));
        if self.sign < 0 {
            -mag
        } else {
            mag
        }
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            f.write_str("-")?;
        }
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

/// Exact factorization of a nonzero integer.
///
/// Machine-word cofactors are split with deterministic Miller–Rabin and
/// Pollard–Brent; larger inputs are first trial-divided up to
/// [`TRIAL_DIVISION_LIMIT`] and rejected if the remaining cofactor is still
/// wider than a machine word.
pub fn factor(n: &BigInt) -> Result<PrimeFactorization> {
    if n.is_zero() {
        return Err(Error::ZeroArgument("cannot factor 0".into()));
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut factors = BTreeMap::new();

    if m.to_u64().is_none() {
        let mut d = 2u64;
        while d <= TRIAL_DIVISION_LIMIT && m.to_u64().is_none() {
            let db = BigInt::from(d);
            while m.is_multiple_of(&db) {
                m /= &db;
                *factors.entry(d).or_insert(0) += 1;
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if m.to_u64().is_none() {
            return Err(Error::ResourceLimit(format!(
                "cofactor {m} of {n} has no prime factor below {TRIAL_DIVISION_LIMIT} and exceeds 64 bits"
            )));
        }
    }
    factor_u64(m.to_u64().expect("fits"), &mut factors);
    Ok(PrimeFactorization { sign, factors })
}

fn factor_u64(mut n: u64, out: &mut BTreeMap<u64, u32>) {
    for d in [2u64, 3, 5] {
        while n.is_multiple_of(d) {
            n /= d;
            *out.entry(d).or_insert(0) += 1;
        }
    }
    let mut d = 7u64;
    while d < 1000 && d * d <= n {
        while n.is_multiple_of(d) {
            n /= d;
            *out.entry(d).or_insert(0) += 1;
        }
        d += 2;
    }
    split(n, out);
}

fn split(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_brent(n);
    split(d, out);
    split(n / d, out);
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Miller–Rabin with the first twelve primes as bases, which is exact for
/// every 64-bit integer.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial divisor of the odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1..n {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut r = 1usize;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..(r - k).min(128) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("composite input always splits")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: i64) -> PrimeFactorization {
        factor(&BigInt::from(n)).unwrap()
    }

    fn map(pairs: &[(u64, u32)]) -> BTreeMap<u64, u32> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn examples() {
        assert_eq!(fac(216).factors, map(&[(2, 3), (3, 3)]));
        let m1 = fac(-1);
        assert_eq!(m1.sign, -1);
        assert!(m1.factors.is_empty());
        assert_eq!(fac(550).factors, map(&[(2, 1), (5, 2), (11, 1)]));
        assert!(matches!(factor(&BigInt::zero()), Err(Error::ZeroArgument(_))));
    }

    #[test]
    fn hard_word_sized_inputs() {
        // product of two primes near 2^31 and a square of a prime near 10^6
        let n = 2147483647u64 * 2147483629;
        assert_eq!(factor(&BigInt::from(n)).unwrap().factors, map(&[(2147483629, 1), (2147483647, 1)]));
        let sq = 999983u64 * 999983;
        assert_eq!(factor(&BigInt::from(sq)).unwrap().factors, map(&[(999983, 2)]));
        assert!(is_prime_u64(18446744073709551557));
        assert!(!is_prime_u64(3215031751));
    }

    #[test]
    fn wide_inputs() {
        let n: BigInt = BigInt::from(u64::MAX) * BigInt::from(6u32);
        let f = factor(&n).unwrap();
        assert_eq!(f.to_integer(), n);
        let big_prime = BigInt::from(18446744073709551557u64);
        let too_big = &big_prime * &big_prime;
        assert!(matches!(factor(&too_big), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn matches_trial_division() {
        for n in 1u64..3000 {
            let mut expect = BTreeMap::new();
            let mut m = n;
            let mut d = 2;
            while m > 1 {
                while m % d == 0 {
                    m /= d;
                    *expect.entry(d).or_insert(0) += 1;
                }
                d += 1;
            }
            assert_eq!(factor(&BigInt::from(n)).unwrap().factors, expect, "{n}");
        }
    }
}
