//! Multiplicative seminorms: the Gauss norm on `ℚ[x]` and a generic axiom
//! checker.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::valuation::{norm, RationalPlace};
use crate::arith::{fmt_rational, ExactRational, Prime};

/// Polynomial with rational coefficients; `coeffs[i]` multiplies `x^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<ExactRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigRational::zero();
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let coeff = fmt_rational(&mag);
            match i {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coeff}")?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `max_i |a_i|_p` over the coefficients; zero for the zero polynomial.
pub fn gauss_norm(f: &RationalPolynomial, p: Prime) -> ExactRational {
    f.coeffs
        .iter()
        .map(|c| norm(c, RationalPlace::Prime(p)))
        .max()
        .unwrap_or_else(BigRational::zero)
}

/// Minimal ring interface needed to test seminorm axioms.
pub trait RingElement: Clone + fmt::Display {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
}

impl RingElement for ExactRational {
    fn ring_zero() -> Self {
        BigRational::zero()
    }
    fn ring_one() -> Self {
        BigRational::one()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl RingElement for RationalPolynomial {
    fn ring_zero() -> Self {
        RationalPolynomial::new(Vec::new())
    }
    fn ring_one() -> Self {
        RationalPolynomial::constant(BigRational::one())
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// `|0| = 0`
    ZeroToZero,
    /// `|1| = 1`
    OneToOne,
    /// `|fg| = |f||g|`
    Multiplicative,
    /// `|f + g| ≤ |f| + |g|`
    Triangle,
}

#[derive(Debug, Clone)]
pub struct AxiomCheck<T> {
    pub axiom: Axiom,
    pub passed: bool,
    /// Elements violating the axiom, if any.
    pub witness: Option<Vec<T>>,
}

#[derive(Debug, Clone)]
pub struct SeminormReport<T> {
    pub checks: Vec<AxiomCheck<T>>,
}

impl<T> SeminormReport<T> {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: Axiom) -> Option<&AxiomCheck<T>> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

/// Tests the seminorm axioms on `samples` (pairs are all ordered pairs).
pub fn check_seminorm_axioms<T, F>(norm_fn: F, samples: &[T]) -> SeminormReport<T>
where
    T: RingElement,
    F: Fn(&T) -> ExactRational,
{
    let single = |axiom, x: T, expected: ExactRational| {
        let passed = norm_fn(&x) == expected;
        AxiomCheck { axiom, passed, witness: (!passed).then(|| vec![x]) }
    };
    let mut checks = vec![
        single(Axiom::ZeroToZero, T::ring_zero(), BigRational::zero()),
        single(Axiom::OneToOne, T::ring_one(), BigRational::one()),
    ];

    let norms: Vec<ExactRational> = samples.iter().map(&norm_fn).collect();
    let mut mult_witness = None;
    let mut tri_witness = None;
    'outer: for (i, f) in samples.iter().enumerate() {
        for (j, g) in samples.iter().enumerate() {
            if mult_witness.is_none() && norm_fn(&f.ring_mul(g)) != &norms[i] * &norms[j] {
                mult_witness = Some(vec![f.clone(), g.clone()]);
            }
            if tri_witness.is_none() && norm_fn(&f.ring_add(g)) > &norms[i] + &norms[j] {
                tri_witness = Some(vec![f.clone(), g.clone()]);
            }
            if mult_witness.is_some() && tri_witness.is_some() {
                break 'outer;
            }
        }
    }
    checks.push(AxiomCheck {
        axiom: Axiom::Multiplicative,
        passed: mult_witness.is_none(),
        witness: mult_witness,
    });
    checks.push(AxiomCheck { axiom: Axiom::Triangle, passed: tri_witness.is_none(), witness: tri_witness });
    SeminormReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;

    fn q(s: &str) -> ExactRational {
        parse_rational(s).unwrap()
    }

    fn poly(cs: &[&str]) -> RationalPolynomial {
        RationalPolynomial::new(cs.iter().map(|c| q(c)).collect())
    }

    #[test]
    fn gauss_norm_examples() {
        let p5 = Prime::new(5).unwrap();
        assert_eq!(gauss_norm(&poly(&["1"]), p5), q("1"));
        assert_eq!(gauss_norm(&poly(&["3", "0", "5"]), p5), q("1"));
        assert_eq!(gauss_norm(&poly(&["1/25", "10"]), p5), q("25"));
        assert_eq!(gauss_norm(&poly(&[]), p5), q("0"));
    }

    #[test]
    fn trims_and_prints() {
        let f = poly(&["3", "0", "5", "0", "0"]);
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.to_string(), "5x^2 + 3");
        assert_eq!(poly(&["-1/2", "-1", "1"]).to_string(), "x^2 - x - 1/2");
    }

    #[test]
    fn constant_one_fails_zero_axiom() {
        let samples = vec![poly(&["1", "2"]), poly(&["3"])];
        let report = check_seminorm_axioms(|_: &RationalPolynomial| q("1"), &samples);
        let zero = report.check(Axiom::ZeroToZero).unwrap();
        assert!(!zero.passed);
        assert!(zero.witness.as_ref().unwrap()[0].is_zero());
        assert!(report.check(Axiom::Multiplicative).unwrap().passed);
    }

    #[test]
    fn squared_norm_breaks_triangle() {
        let samples = vec![q("1"), q("2")];
        let report = check_seminorm_axioms(|x: &ExactRational| x * x, &samples);
        assert!(report.check(Axiom::Multiplicative).unwrap().passed);
        assert!(!report.check(Axiom::Triangle).unwrap().passed);
    }

    #[test]
    fn two_adic_norm_on_rationals_passes() {
        let p2 = Prime::new(2).unwrap();
        let samples: Vec<_> = ["1/2", "3", "-4/9", "12", "5/8", "0", "-7"].iter().map(|s| q(s)).collect();
        let report = check_seminorm_axioms(|x| norm(x, RationalPlace::Prime(p2)), &samples);
        assert!(report.all_passed());
    }
}
