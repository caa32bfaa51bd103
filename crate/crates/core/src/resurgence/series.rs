//! The divergent Euler series `Σ (−1)^m m! t^{m+1}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::real::{is_positive, real_from_bigint, real_from_rational, real_int, Real};
use super::{Method, SummationResult};
use crate::arith::ExactRational;
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Largest order accepted for exact partial sums.
pub const MAX_ORDER: usize = 2000;

/// Coefficients `c_m = (−1)^m m!` of `t^{m+1}`, for `m = 0..=order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerSeries {
    coeffs: Vec<BigInt>,
}

impl EulerSeries {
    pub fn new(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::ResourceLimit(format!("series order {order} above {MAX_ORDER}")));
        }
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = BigInt::one();
        for m in 0..=order {
            if m > 0 {
                c *= -(m as i64);
            }
            coeffs.push(c.clone());
        }
        Ok(EulerSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `S_N(t)` as an exact rational.
    pub fn eval(&self, t: &ExactRational) -> ExactRational {
        // Horner in t, then one extra factor of t
        let inner = self
            .coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * t + ExactRational::from_integer(c.clone()));
        inner * t
    }

    /// `S_N(t)` in working precision.
    pub fn eval_real(&self, t: &Real) -> Real {
        let inner = self.coeffs.iter().rev().fold(real_int(0), |acc, c| acc * t + real_from_bigint(c));
        inner * t
    }

    /// `S_N` as an integer polynomial in `t`.
    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(std::iter::once(BigInt::zero()).chain(self.coeffs.iter().cloned()).collect())
    }
}

fn check_t(t: &ExactRational) -> Result<()> {
    if is_positive(t) {
        Ok(())
    } else {
        Err(Error::Domain(format!("t must be positive, got {t}")))
    }
}

/// `S_N(t) = Σ_{m=0}^{N} (−1)^m m! t^{m+1}`, evaluated exactly and rounded
/// once. The error estimate is the first omitted term `(N+1)!·t^{N+2}`.
pub fn euler_series_partial(t: &ExactRational, order: usize) -> Result<SummationResult> {
    check_t(t)?;
    let series = EulerSeries::new(order)?;
    let next = EulerSeries::new(order + 1)?.coeffs.pop().expect("non-empty").abs();
    let omitted = ExactRational::from_integer(next) * num_traits::pow(t.clone(), order + 2);
    Ok(SummationResult {
        value: real_from_rational(&series.eval(t)),
        method: Method::PartialSum { order },
        error_estimate: real_from_rational(&omitted),
    })
}

/// Index of the smallest term `m!·t^{m+1}`. Consecutive terms compare as
/// `(m+1)·t` against 1, so the scan stops at the first `m` with `(m+1)t ≥ 1`;
/// on a tie the smaller index is taken.
pub fn optimal_truncation_index(t: &ExactRational) -> Result<usize> {
    check_t(t)?;
    let mut m = 0usize;
    while ExactRational::from_integer((m + 1).into()) * t < ExactRational::one() {
        m += 1;
        if m > MAX_ORDER {
            return Err(Error::ResourceLimit(format!("optimal truncation for t = {t} exceeds order {MAX_ORDER}")));
        }
    }
    Ok(m)
}

/// The exact residual `(t − S_N) − t²·S_N′` of the truncated series in the
/// Euler equation, as a polynomial in `t`.
pub fn symbolic_series_residual(order: usize) -> Result<IntPolynomial> {
    let s = EulerSeries::new(order)?.to_polynomial();
    let t_sq_ds = IntPolynomial::new(
        [BigInt::zero(), BigInt::zero()].into_iter().chain(s.derivative().coeffs().iter().cloned()).collect(),
    );
    let mut coeffs = vec![BigInt::zero(); s.coeffs().len().max(t_sq_ds.coeffs().len())];
    coeffs[1] += 1;
    for (k, c) in s.coeffs().iter().enumerate() {
        coeffs[k] -= c;
    }
    for (k, c) in t_sq_ds.coeffs().iter().enumerate() {
        coeffs[k] -= c;
    }
    Ok(IntPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;
    use crate::resurgence::real::fmt_real;

    fn q(s: &str) -> ExactRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn partial_sums() {
        assert_eq!(fmt_real(&euler_series_partial(&q("1/10"), 1).unwrap().value, 20), "0.09");
        assert_eq!(fmt_real(&euler_series_partial(&q("1/10"), 3).unwrap().value, 20), "0.0914");
        let r = euler_series_partial(&q("1/10"), 3).unwrap();
        assert_eq!(fmt_real(&r.error_estimate, 20), "0.00024");
        assert!(euler_series_partial(&q("0"), 3).is_err());
    }

    #[test]
    fn coefficients_alternate_factorials() {
        let s = EulerSeries::new(6).unwrap();
        let expect: Vec<BigInt> = [1, -1, 2, -6, 24, -120, 720].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(s.coefficients(), &expect[..]);
        assert!(EulerSeries::new(MAX_ORDER + 1).is_err());
    }

    #[test]
    fn truncation_index_matches_scan() {
        for (t, m) in [("1/10", 9), ("1/2", 1), ("2", 0), ("3/10", 3), ("1", 0), ("1/20", 19)] {
            assert_eq!(optimal_truncation_index(&q(t)).unwrap(), m, "{t}");
            // independent scan over exact term magnitudes
            let tt = q(t);
            let term = |k: usize| {
                ExactRational::from_integer((1..=k as i64).map(BigInt::from).product()) * num_traits::pow(tt.clone(), k + 1)
            };
            let best = (0..25).min_by(|&a, &b| term(a).cmp(&term(b))).unwrap();
            assert_eq!(best, m, "{t}");
        }
    }

    #[test]
    fn residual_telescopes() {
        for n in 0..=12usize {
            let r = symbolic_series_residual(n).unwrap();
            let mut expect = vec![BigInt::zero(); n + 3];
            let fact: BigInt = (1..=(n as i64 + 1)).map(BigInt::from).product();
            expect[n + 2] = if n % 2 == 0 { -fact } else { fact };
            assert_eq!(r, IntPolynomial::new(expect), "N = {n}");
        }
    }
}
