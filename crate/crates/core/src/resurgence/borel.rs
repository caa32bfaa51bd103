//! Borel–Laplace summation of the Euler series by double-exponential
//! quadrature.
//!
//! The Borel transform of `Σ (−1)^m m! t^{m+1}` is `t/(1+tu)` after the
//! substitution `s = t·u`, so the sum is `y_B(t) = t·∫₀^∞ e^{−u}/(1+tu) du`.
//! Under `u = exp(τ − e^{−τ})` the integrand decays double-exponentially at
//! both ends of the `τ` line and the trapezoidal rule converges very fast.

use std::sync::OnceLock;

use super::real::{abs_real, real_int, to_f64, Real, PRECISION_BITS};
use super::{Method, SummationResult};
use crate::{Error, Result};

/// Half-width of the truncated `τ` interval.
const HALF_WIDTH: i64 = 5;
/// Step halvings allowed before giving up.
pub const MAX_LEVEL: u32 = 8;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// `(u_k, w_k·e^{−u_k})` at the nodes first introduced on each level.
struct Level {
    nodes: Vec<(Real, Real)>,
}

fn level(l: u32) -> &'static Level {
    static LEVELS: [OnceLock<Level>; MAX_LEVEL as usize + 1] = [const { OnceLock::new() }; MAX_LEVEL as usize + 1];
    LEVELS[l as usize].get_or_init(|| {
        // level 0 has step 1/2; level l has step 2^{−l−1}
        let denom = 1i64 << (l + 1);
        let ks: Vec<i64> = if l == 0 {
            (-2 * HALF_WIDTH..=2 * HALF_WIDTH).collect()
        } else {
            (-HALF_WIDTH * denom..=HALF_WIDTH * denom).filter(|k| k % 2 != 0).collect()
        };
        let one = real_int(1);
        let den = real_int(denom);
        let nodes = ks
            .into_iter()
            .map(|k| {
                let tau = real_int(k) / &den;
                let e = (-tau.clone()).exp();
                let u = (tau - &e).exp();
                let w = &u * (&one + e);
                let g = w * (-u.clone()).exp();
                (u, g)
            })
            .collect();
        Level { nodes }
    })
}

fn step(l: u32) -> Real {
    real_int(1) / real_int(1i64 << (l + 1))
}

fn check_tolerance(tolerance: f64) -> Result<()> {
    let floor = 2f64.powi(-(PRECISION_BITS as i32) + 8);
    if !(tolerance.is_finite() && tolerance >= floor) {
        return Err(Error::Domain(format!("tolerance {tolerance} must be finite and at least {floor:e}")));
    }
    Ok(())
}

/// `y_B(t)`, halving the step until two successive trapezoidal estimates
/// agree to `tolerance` (relative). The error estimate is that last
/// difference.
pub fn borel_sum(t: &Real, tolerance: f64) -> Result<SummationResult> {
    if *t <= real_int(0) {
        return Err(Error::Domain(format!("t must be positive, got {}", to_f64(t))));
    }
    check_tolerance(tolerance)?;
    let one = real_int(1);
    let mut raw = real_int(0);
    let mut nodes = 0usize;
    let mut previous: Option<Real> = None;
    let mut last_rel = f64::INFINITY;
    for l in 0..=MAX_LEVEL {
        for (u, g) in &level(l).nodes {
            raw += g / (&one + t * u);
        }
        nodes += level(l).nodes.len();
        let estimate = &raw * step(l) * t;
        if let Some(prev) = previous {
            let diff = abs_real(&estimate - prev);
            last_rel = to_f64(&diff) / to_f64(&estimate).abs();
            if l >= 2 && last_rel <= tolerance {
                return Ok(SummationResult {
                    value: estimate,
                    method: Method::Borel { levels: l, nodes },
                    error_estimate: diff,
                });
            }
        }
        previous = Some(estimate);
    }
    Err(Error::Accuracy(last_rel))
}

/// `y_B(t) + a·e^{1/t}`.
pub fn general_solution(t: &Real, a: &Real, tolerance: f64) -> Result<SummationResult> {
    let base = borel_sum(t, tolerance)?;
    if *a == Real::ZERO {
        return Ok(SummationResult { method: Method::General { a: 0.0 }, ..base });
    }
    let inv_t = real_int(1) / t;
    if to_f64(&inv_t) > 700.0 {
        return Err(Error::Range(format!(
            "e^(1/t) with 1/t = {:.3e} overflows double precision output",
            to_f64(&inv_t)
        )));
    }
    Ok(SummationResult {
        value: base.value + a * inv_t.exp(),
        method: Method::General { a: to_f64(a) },
        error_estimate: base.error_estimate,
    })
}

/// `|t²·(y(t+h) − y(t−h))/(2h) − (t − y(t))|`.
pub fn ode_residual<F>(y: F, t: &Real, h: &Real) -> Result<Real>
where
    F: Fn(&Real) -> Result<Real>,
{
    let zero = real_int(0);
    if !(*h > zero && t > h) {
        return Err(Error::Domain("ode_residual needs t > h > 0".into()));
    }
    let dy = (y(&(t + h))? - y(&(t - h))?) / (real_int(2) * h);
    let yt = y(t)?;
    Ok(abs_real(t * t * dy - (t - yt)))
}
