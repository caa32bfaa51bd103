use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::valuation::Valuation;
use crate::arith::{base_digits, from_base_digits, mod_inverse, residue, split_prime_power, ExactRational, Prime};
use crate::{Error, Result};

/// A p-adic number `p^v · (u₀ + u₁p + … + u_{r-1}p^{r-1})` known modulo
/// `p^{v+r}`.
///
/// The unit part is normalized (`u₀ ≠ 0`) for nonzero values; zero is stored
/// canonically as valuation `∞` with all-zero digits. The precision `r` is the
/// number of unit digits that are actually guaranteed: arithmetic reports
/// fewer digits when leading digits cancel and propagates the minimum
/// precision of its operands.
///
/// Equality compares the prime, the valuation, and the unit digits up to the
/// smaller of the two precisions, so it is not transitive across precisions
/// and the type deliberately does not implement `Eq`.
#[derive(Debug, Clone)]
pub struct PadicNumber {
    p: Prime,
    valuation: Valuation,
    unit: Vec<u64>,
}

fn check_precision(r: usize) -> Result<()> {
    if r == 0 {
        Err(Error::Domain("precision must be at least one digit".into()))
    } else {
        Ok(())
    }
}

impl PadicNumber {
    pub fn zero(p: Prime, r: usize) -> Result<Self> {
        check_precision(r)?;
        Ok(Self::zero_unchecked(p, r))
    }

    fn zero_unchecked(p: Prime, r: usize) -> Self {
        PadicNumber { p, valuation: Valuation::Infinity, unit: vec![0; r] }
    }

    /// Builds `p^v · unit` from a unit residue (taken modulo `p^r`, must be
    /// prime to `p`).
    fn from_unit_residue(p: Prime, v: i64, unit: &BigUint, r: usize) -> Self {
        let digits = base_digits(unit, p, r);
        debug_assert!(digits[0] != 0, "unit part must be prime to p");
        PadicNumber { p, valuation: Valuation::Finite(v), unit: digits }
    }

    /// Normalizes `p^shift · m` where `m` is only known modulo `p^abs_len`.
    fn normalize(p: Prime, shift: i64, m: &BigUint, abs_len: usize, r_cap: usize) -> Self {
        if abs_len == 0 || m.is_zero() {
            return Self::zero_unchecked(p, r_cap.max(1));
        }
        let (k, unit) = split_prime_power(&BigInt::from(m.clone()), p);
        let k = k as usize;
        if k >= abs_len {
            return Self::zero_unchecked(p, r_cap.max(1));
        }
        let r = (abs_len - k).min(r_cap);
        let unit = unit.to_biguint().expect("positive");
        Self::from_unit_residue(p, shift + k as i64, &(unit % p.pow(r as u32)), r)
    }

    pub fn from_integer(n: &BigInt, p: Prime, r: usize) -> Result<Self> {
        Self::from_rational(&BigRational::from_integer(n.clone()), p, r)
    }

    /// The expansion of `a = p^n · b/c` (`p ∤ bc`): valuation `n`, unit digits
    /// of `b·c⁻¹ mod p^r`.
    pub fn from_rational(a: &ExactRational, p: Prime, r: usize) -> Result<Self> {
        check_precision(r)?;
        if a.is_zero() {
            return Ok(Self::zero_unchecked(p, r));
        }
        let (vn, b) = split_prime_power(a.numer(), p);
        let (vd, c) = split_prime_power(a.denom(), p);
        let modulus = p.pow(r as u32);
        let m = BigInt::from(modulus.clone());
        let c_inv = mod_inverse(&c, &m).expect("c is prime to p");
        let unit = residue(&(b * c_inv), &modulus);
        Ok(Self::from_unit_residue(p, vn - vd, &unit, r))
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Number of guaranteed unit digits.
    pub fn precision(&self) -> usize {
        self.unit.len()
    }

    pub fn valuation(&self) -> Valuation {
        self.valuation
    }

    pub fn unit_digits(&self) -> &[u64] {
        &self.unit
    }

    pub fn is_zero(&self) -> bool {
        self.valuation.is_infinite()
    }

    /// The unit part as an integer in `[0, p^r)`.
    pub fn unit_residue(&self) -> BigUint {
        from_base_digits(&self.unit, self.p)
    }

    /// Exponent `N` such that the value is known modulo `p^N`; `None` for zero.
    pub fn absolute_precision(&self) -> Option<i64> {
        self.valuation.finite().map(|v| v + self.precision() as i64)
    }

    /// For `v ≥ 0`, the integer representative in `[0, p^{v+r})`.
    pub fn integer_residue(&self) -> Option<BigUint> {
        match self.valuation {
            Valuation::Infinity => Some(BigUint::zero()),
            Valuation::Finite(v) if v >= 0 => Some(self.p.pow(v as u32) * self.unit_residue()),
            Valuation::Finite(_) => None,
        }
    }

    fn same_prime(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::MixedPrimes(self.p.get(), other.p.get()))
        }
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let modulus = self.p.pow(self.precision() as u32);
        let u = (&modulus - self.unit_residue()) % &modulus;
        Self::from_unit_residue(self.p, self.valuation.finite().unwrap(), &u, self.precision())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let (vx, vy) = match (self.valuation, other.valuation) {
            (Valuation::Infinity, _) => return Ok(other.clone()),
            (_, Valuation::Infinity) => return Ok(self.clone()),
            (Valuation::Finite(a), Valuation::Finite(b)) => (a, b),
        };
        let p = self.p;
        let lo = vx.min(vy);
        let abs = (vx + self.precision() as i64).min(vy + other.precision() as i64);
        let len = (abs - lo) as usize;
        let modulus = p.pow(len as u32);
        let sx = p.pow((vx - lo) as u32) * self.unit_residue();
        let sy = p.pow((vy - lo) as u32) * other.unit_residue();
        let sum = (sx + sy) % modulus;
        let r_cap = self.precision().min(other.precision());
        Ok(Self::normalize(p, lo, &sum, len, r_cap))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let r = self.precision().min(other.precision());
        let v = self.valuation + other.valuation;
        let Valuation::Finite(v) = v else {
            return Ok(Self::zero_unchecked(self.p, r));
        };
        let modulus = self.p.pow(r as u32);
        let u = (self.unit_residue() * other.unit_residue()) % modulus;
        Ok(Self::from_unit_residue(self.p, v, &u, r))
    }

    pub fn inv(&self) -> Result<Self> {
        let Valuation::Finite(v) = self.valuation else {
            return Err(Error::NotInvertible("the zero p-adic number".into()));
        };
        let r = self.precision();
        let m = BigInt::from_biguint(Sign::Plus, self.p.pow(r as u32));
        let inv = mod_inverse(&BigInt::from(self.unit_residue()), &m).expect("unit");
        Ok(Self::from_unit_residue(self.p, -v, &inv.to_biguint().unwrap(), r))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        self.mul(&other.inv()?)
    }

    /// `|x|_p` as an exact power of `1/p`.
    pub fn norm(&self) -> ExactRational {
        match self.valuation {
            Valuation::Infinity => BigRational::zero(),
            Valuation::Finite(v) => crate::arith::rational_pow(self.p.get(), -v),
        }
    }

    /// Truncates to at most `r` unit digits.
    pub fn with_precision(&self, r: usize) -> Result<Self> {
        check_precision(r)?;
        let mut out = self.clone();
        out.unit.truncate(r);
        if out.is_zero() {
            out.unit = vec![0; r];
        }
        Ok(out)
    }
}

impl PartialEq for PadicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.p != other.p || self.valuation != other.valuation {
            return false;
        }
        let n = self.precision().min(other.precision());
        self.unit[..n] == other.unit[..n]
    }
}

/// Power-series form, e.g. `3 + 1*7 + 2*7^2 + O(7^3)`.
impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.p;
        let Valuation::Finite(v) = self.valuation else {
            return write!(f, "0 + O({p}^{})", self.precision());
        };
        let power = |e: i64| match e {
            0 => String::new(),
            1 => format!("*{p}"),
            _ => format!("*{p}^{e}"),
        };
        let mut first = true;
        for (i, &d) in self.unit.iter().enumerate() {
            if d == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{d}{}", power(v + i as i64))?;
        }
        write!(f, " + O({p}^{})", v + self.precision() as i64)
    }
}

/// Integer `m` reduced modulo `p^k`, handy for residue-level comparisons.
pub fn reduce(m: &BigInt, p: Prime, k: u32) -> BigUint {
    residue(m, &p.pow(k))
}

/// Convenience check that `x` represents `m` to its full absolute precision.
pub fn represents_integer(x: &PadicNumber, m: &BigInt) -> bool {
    match x.absolute_precision() {
        None => {
            // zero: m must vanish modulo the stored precision
            m.mod_floor(&BigInt::from(x.p.pow(x.precision() as u32))).is_zero()
        }
        Some(abs) if abs >= 0 => {
            x.integer_residue().map(|r| r == reduce(m, x.p, abs as u32)).unwrap_or(false)
        }
        Some(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn int(n: i64, pr: u64, r: usize) -> PadicNumber {
        PadicNumber::from_integer(&BigInt::from(n), p(pr), r).unwrap()
    }

    fn rat(s: &str, pr: u64, r: usize) -> PadicNumber {
        PadicNumber::from_rational(&parse_rational(s).unwrap(), p(pr), r).unwrap()
    }

    #[test]
    fn from_integer_examples() {
        let x = int(216, 2, 8);
        assert_eq!(x.valuation(), Valuation::Finite(3));
        assert_eq!(x.unit_digits(), &[1, 1, 0, 1, 1, 0, 0, 0]);
        let z = int(0, 5, 4);
        assert_eq!(z.valuation(), Valuation::Infinity);
        assert_eq!(z.unit_digits(), &[0, 0, 0, 0]);
        let y = int(216, 5, 4);
        assert_eq!(y.valuation(), Valuation::Finite(0));
        assert_eq!(y.unit_digits(), &[1, 3, 3, 1]);
    }

    #[test]
    fn from_rational_examples() {
        let x = rat("1/3", 5, 4);
        assert_eq!(x.valuation(), Valuation::Finite(0));
        assert_eq!(x.unit_digits(), &[2, 3, 1, 3]);
        let y = rat("7", 7, 3);
        assert_eq!(y.valuation(), Valuation::Finite(1));
        assert_eq!(y.unit_digits(), &[1, 0, 0]);
        // 14^{-1} mod 9 by brute force
        let inv14 = (0u64..9).find(|k| (14 * k) % 9 == 1).unwrap();
        let z = rat("9/14", 3, 2);
        assert_eq!(z.valuation(), Valuation::Finite(2));
        assert_eq!(z.unit_digits(), &[inv14 % 3, inv14 / 3]);
    }

    #[test]
    fn arithmetic_examples() {
        let s = int(3, 7, 4).add(&int(4, 7, 4)).unwrap();
        assert_eq!(s, int(7, 7, 4));
        assert_eq!(s.valuation(), Valuation::Finite(1));
        // the cancelled leading digit is not guaranteed any more
        assert_eq!(s.unit_digits(), &[1, 0, 0]);

        let one = rat("1/3", 5, 4).mul(&int(3, 5, 4)).unwrap();
        assert_eq!(one, int(1, 5, 4));
        assert_eq!(one.precision(), 4);

        let x = rat("-22/45", 3, 6);
        assert!(x.add(&x.neg()).unwrap().is_zero());
        assert_eq!(x.mul(&x.inv().unwrap()).unwrap(), int(1, 3, 6));
    }

    #[test]
    fn arithmetic_errors() {
        assert!(matches!(int(1, 5, 3).add(&int(1, 7, 3)), Err(Error::MixedPrimes(5, 7))));
        assert!(matches!(int(0, 5, 3).inv(), Err(Error::NotInvertible(_))));
        assert!(matches!(PadicNumber::zero(p(5), 0), Err(Error::Domain(_))));
    }

    #[test]
    fn negative_valuations() {
        let x = rat("1/49", 7, 3);
        assert_eq!(x.valuation(), Valuation::Finite(-2));
        assert_eq!(x.norm(), parse_rational("49").unwrap());
        let y = x.mul(&int(49, 7, 3)).unwrap();
        assert_eq!(y, int(1, 7, 3));
    }

    #[test]
    fn display_series() {
        assert_eq!(int(108, 7, 3).to_string(), "3 + 1*7 + 2*7^2 + O(7^3)");
        assert_eq!(rat("1/7", 7, 2).to_string(), "1*7^-1 + O(7^1)");
        assert_eq!(int(0, 7, 2).to_string(), "0 + O(7^2)");
    }

    #[test]
    fn represents() {
        assert!(represents_integer(&int(-1, 5, 4), &BigInt::from(-1)));
        assert!(represents_integer(&int(3, 7, 4).add(&int(4, 7, 4)).unwrap(), &BigInt::from(7)));
    }
}
