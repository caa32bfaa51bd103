//! Polynomials over a prime field `𝔽_p` and rational functions in `𝔽_p(x)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{mod_inverse_u64, Prime};
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Highest degree accepted for function-field factorization.
pub const MAX_FACTOR_DEGREE: usize = 16;
/// Largest number of monic polynomials a single sieve pass may index.
pub const MAX_SIEVE_SIZE: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqPolynomial {
    p: Prime,
    coeffs: Vec<u64>,
}

impl FqPolynomial {
    /// Coefficients are reduced modulo `p`, trailing zeros trimmed.
    pub fn new(p: Prime, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p.get()).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FqPolynomial { p, coeffs }
    }

    pub fn zero(p: Prime) -> Self {
        FqPolynomial { p, coeffs: Vec::new() }
    }

    pub fn one(p: Prime) -> Self {
        Self::new(p, vec![1])
    }

    /// `x + c`.
    pub fn linear(p: Prime, c: u64) -> Self {
        Self::new(p, vec![c, 1])
    }

    pub fn from_int_poly(f: &IntPolynomial, p: Prime) -> Self {
        let pb = p.to_bigint();
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("below p"))
            .collect();
        Self::new(p, coeffs)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    fn pm(&self) -> u64 {
        self.p.get()
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.pm();
        let coeffs = self.coeffs.iter().map(|&a| ((a as u128 * c as u128) % p as u128) as u64).collect();
        Self::new(self.p, coeffs)
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(mod_inverse_u64(l, self.pm()).expect("field")),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.pm();
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeffs.get(i).unwrap_or(&0) + other.coeffs.get(i).unwrap_or(&0)) % p)
            .collect();
        Self::new(self.p, coeffs)
    }

    pub fn neg(&self) -> Self {
        let p = self.pm();
        Self::new(self.p, self.coeffs.iter().map(|&a| (p - a) % p).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.pm() as u128;
        let mut out = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::new(self.p, out.into_iter().map(|c| c as u64).collect())
    }

    /// Euclidean division; `None` if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let p = self.pm();
        let lead_inv = mod_inverse_u64(divisor.leading().unwrap(), p).expect("field");
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Some((Self::zero(self.p), self.clone()));
        };
        let mut quot = vec![0u64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = ((rem[k + dd] as u128 * lead_inv as u128) % p as u128) as u64;
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let sub = ((c as u128 * b as u128) % p as u128) as u64;
                rem[k + j] = (rem[k + j] + p - sub) % p;
            }
        }
        Some((Self::new(self.p, quot), Self::new(self.p, rem)))
    }

    /// Monic polynomial of degree `d` whose lower coefficients are the base-`p`
    /// digits of `index`.
    pub fn monic_from_index(p: Prime, d: usize, mut index: u64) -> Self {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(index % p.get());
            index /= p.get();
        }
        coeffs.push(1);
        Self::new(p, coeffs)
    }

    fn monic_index(&self) -> u64 {
        let p = self.pm();
        self.coeffs[..self.coeffs.len() - 1].iter().rev().fold(0, |acc, &c| acc * p + c)
    }
}

impl fmt::Display for FqPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let coeff = if c == 1 && i > 0 { String::new() } else { c.to_string() };
                match i {
                    0 => coeff,
                    1 => format!("{coeff}x"),
                    _ => format!("{coeff}x^{i}"),
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Monic irreducibles of each degree, built on demand by sieving.
#[derive(Debug)]
pub struct IrreducibleTable {
    p: Prime,
    by_degree: Vec<Vec<FqPolynomial>>,
}

impl IrreducibleTable {
    pub fn new(p: Prime) -> Self {
        IrreducibleTable { p, by_degree: vec![Vec::new()] }
    }

    /// The monic irreducibles of degree exactly `d`.
    pub fn degree(&mut self, d: usize) -> Result<&[FqPolynomial]> {
        while self.by_degree.len() <= d {
            let next = self.by_degree.len();
            let sieved = self.sieve(next)?;
            self.by_degree.push(sieved);
        }
        Ok(&self.by_degree[d])
    }

    /// Marks every product `g·h` with `g` irreducible of degree `i ≤ d/2` and
    /// `h` monic of degree `d − i`; the unmarked monics are irreducible.
    fn sieve(&self, d: usize) -> Result<Vec<FqPolynomial>> {
        let p = self.p;
        let count = (p.get() as u128).checked_pow(d as u32).filter(|&c| c <= MAX_SIEVE_SIZE as u128);
        let Some(count) = count else {
            return Err(Error::ResourceLimit(format!(
                "sieving monic polynomials of degree {d} over F_{p} is beyond the supported size"
            )));
        };
        let count = count as u64;
        let mut reducible = vec![false; count as usize];
        for i in 1..=d / 2 {
            let cofactors = p.get().pow((d - i) as u32);
            for g in &self.by_degree[i] {
                for h in 0..cofactors {
                    let prod = g.mul(&FqPolynomial::monic_from_index(p, d - i, h));
                    reducible[prod.monic_index() as usize] = true;
                }
            }
        }
        Ok((0..count)
            .filter(|&k| !reducible[k as usize])
            .map(|k| FqPolynomial::monic_from_index(p, d, k))
            .collect())
    }

    /// Factorization of a nonzero polynomial into its leading coefficient and
    /// monic irreducible factors with multiplicities, by trial division in
    /// ascending degree.
    pub fn factor(&mut self, f: &FqPolynomial) -> Result<(u64, Vec<(FqPolynomial, u32)>)> {
        let Some(deg) = f.degree() else {
            return Err(Error::ZeroArgument("cannot factor the zero polynomial".into()));
        };
        if deg > MAX_FACTOR_DEGREE {
            return Err(Error::ResourceLimit(format!(
                "degree {deg} exceeds the factorization limit {MAX_FACTOR_DEGREE}"
            )));
        }
        let lead = f.leading().unwrap();
        let mut rem = f.monic();
        let mut out = Vec::new();
        let mut d = 1;
        while rem.degree().unwrap_or(0) >= 2 * d {
            for g in self.degree(d)?.to_vec() {
                let mut e = 0;
                while let Some((q, r)) = rem.div_rem(&g).filter(|(_, r)| r.is_zero()) {
                    debug_assert!(r.is_zero());
                    rem = q;
                    e += 1;
                }
                if e > 0 {
                    out.push((g, e));
                }
            }
            d += 1;
        }
        if rem.degree().unwrap_or(0) >= 1 {
            out.push((rem, 1));
        }
        out.sort();
        let mut merged: Vec<(FqPolynomial, u32)> = Vec::new();
        for (g, e) in out {
            match merged.last_mut() {
                Some((h, k)) if *h == g => *k += e,
                _ => merged.push((g, e)),
            }
        }
        Ok((lead, merged))
    }

    pub fn is_irreducible(&mut self, f: &FqPolynomial) -> Result<bool> {
        let (_, factors) = self.factor(f)?;
        Ok(factors.len() == 1 && factors[0].1 == 1 && f.degree().unwrap_or(0) >= 1)
    }
}

/// All monic irreducibles over `𝔽_p` of degree `1..=max_degree`, ordered by
/// degree and then by coefficients.
pub fn enumerate_irreducibles(p: Prime, max_degree: usize) -> Result<Vec<FqPolynomial>> {
    if max_degree == 0 {
        return Err(Error::Domain("max_degree must be at least 1".into()));
    }
    let mut table = IrreducibleTable::new(p);
    let mut out = Vec::new();
    for d in 1..=max_degree {
        out.extend_from_slice(table.degree(d)?);
    }
    Ok(out)
}

/// A nonzero element `num/den` of `𝔽_p(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: FqPolynomial,
    pub den: FqPolynomial,
}

impl RationalFunction {
    pub fn new(num: FqPolynomial, den: FqPolynomial) -> Result<Self> {
        if num.prime() != den.prime() {
            return Err(Error::MixedPrimes(num.prime().get(), den.prime().get()));
        }
        if den.is_zero() {
            return Err(Error::ZeroArgument("denominator of a rational function".into()));
        }
        if num.is_zero() {
            return Err(Error::ZeroArgument("the zero rational function".into()));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(f: FqPolynomial) -> Result<Self> {
        let p = f.prime();
        Self::new(f, FqPolynomial::one(p))
    }

    pub fn prime(&self) -> Prime {
        self.num.prime()
    }

    /// Parses `num` or `num / den` with integer-polynomial syntax, reducing
    /// coefficients modulo `p`.
    pub fn parse(s: &str, p: Prime) -> Result<Self> {
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        let strip = |t: &str| {
            let t = t.trim();
            t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t).to_string()
        };
        let num: IntPolynomial = strip(n).parse()?;
        let den: IntPolynomial = strip(d).parse()?;
        Self::new(FqPolynomial::from_int_poly(&num, p), FqPolynomial::from_int_poly(&den, p))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.leading() == Some(1) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Multiplicity of `g` in `f` (both nonzero, `g` non-constant).
pub fn multiplicity(f: &FqPolynomial, g: &FqPolynomial) -> u32 {
    let mut e = 0;
    let mut rem = f.clone();
    while let Some((q, _)) = rem.div_rem(g).filter(|(_, r)| r.is_zero()) {
        rem = q;
        e += 1;
    }
    e
}

/// Möbius-inversion count of monic irreducibles of degree `d` over `𝔽_p`.
pub fn necklace_count(p: u64, d: u32) -> BigInt {
    let mobius = |mut n: u32| -> i32 {
        let mut k = 0;
        let mut q = 2;
        while q * q <= n {
            if n.is_multiple_of(q) {
                n /= q;
                if n.is_multiple_of(q) {
                    return 0;
                }
                k += 1;
            }
            q += 1;
        }
        if n > 1 {
            k += 1;
        }
        if k % 2 == 0 {
            1
        } else {
            -1
        }
    };
    let total: BigInt = (1..=d)
        .filter(|e| d.is_multiple_of(*e))
        .map(|e| BigInt::from(mobius(e)) * num_traits::pow(BigInt::from(p), (d / e) as usize))
        .sum();
    total / BigInt::from(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn fp(pr: u64, cs: &[u64]) -> FqPolynomial {
        FqPolynomial::new(p(pr), cs.to_vec())
    }

    #[test]
    fn enumerate_examples() {
        let two = enumerate_irreducibles(p(2), 2).unwrap();
        assert_eq!(two, vec![fp(2, &[0, 1]), fp(2, &[1, 1]), fp(2, &[1, 1, 1])]);
        assert_eq!(enumerate_irreducibles(p(2), 1).unwrap().len(), 2);
        let three = enumerate_irreducibles(p(3), 1).unwrap();
        assert_eq!(three, vec![fp(3, &[0, 1]), fp(3, &[1, 1]), fp(3, &[2, 1])]);
        assert_eq!(two[2].to_string(), "x^2 + x + 1");
    }

    #[test]
    fn quadratics_over_f2_by_exhaustion() {
        // a monic quadratic is irreducible iff it has no root in F_2
        let irreducible: Vec<_> = (0..4)
            .map(|k| FqPolynomial::monic_from_index(p(2), 2, k))
            .filter(|f| (0..2).all(|x| (f.coeffs()[0] + f.coeffs()[1] * x + x * x) % 2 != 0))
            .collect();
        assert_eq!(irreducible, vec![fp(2, &[1, 1, 1])]);
    }

    #[test]
    fn counts_match_necklace_formula() {
        for (pr, max) in [(2u64, 10usize), (3, 6), (5, 4), (7, 3)] {
            let mut table = IrreducibleTable::new(p(pr));
            for d in 1..=max {
                let n = table.degree(d).unwrap().len();
                assert_eq!(BigInt::from(n), necklace_count(pr, d as u32), "p={pr} d={d}");
            }
        }
    }

    #[test]
    fn division_and_factoring() {
        let f = fp(2, &[0, 1, 1]); // x^2 + x = x(x+1)
        let (lead, fs) = IrreducibleTable::new(p(2)).factor(&f).unwrap();
        assert_eq!(lead, 1);
        assert_eq!(fs, vec![(fp(2, &[0, 1]), 1), (fp(2, &[1, 1]), 1)]);

        let g = fp(3, &[1, 0, 1]); // x^2 + 1 over F_3
        assert!(IrreducibleTable::new(p(3)).is_irreducible(&g).unwrap());

        let h = fp(5, &[3, 0, 0, 2]).mul(&fp(5, &[1, 1]).mul(&fp(5, &[1, 1])));
        let (lead, fs) = IrreducibleTable::new(p(5)).factor(&h).unwrap();
        let back = fs.iter().fold(FqPolynomial::one(p(5)), |acc, (g, e)| {
            (0..*e).fold(acc, |a, _| a.mul(g))
        });
        assert_eq!(back.scale(lead), h);
        assert_eq!(multiplicity(&h, &fp(5, &[1, 1])), 2 + multiplicity(&fp(5, &[3, 0, 0, 2]), &fp(5, &[1, 1])));
    }

    #[test]
    fn limits() {
        let big = FqPolynomial::monic_from_index(p(2), 17, 1);
        assert!(matches!(IrreducibleTable::new(p(2)).factor(&big), Err(Error::ResourceLimit(_))));
        assert!(matches!(IrreducibleTable::new(p(101)).degree(4), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn parse_rational_function() {
        let f = RationalFunction::parse("x^2+x / x+1", p(2)).unwrap();
        assert_eq!(f.num, fp(2, &[0, 1, 1]));
        assert_eq!(f.den, fp(2, &[1, 1]));
        let g = RationalFunction::parse("(3x^2 + 4)/(x)", p(3)).unwrap();
        assert_eq!(g.num, fp(3, &[1]));
        assert!(RationalFunction::parse("x / 2", p(2)).is_err());
        assert!(RationalFunction::parse("2x", p(2)).is_err());
    }
}
