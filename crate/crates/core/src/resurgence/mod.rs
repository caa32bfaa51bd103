//! The Euler equation `t²·y′ = t − y`: its divergent series solution,
//! optimal truncation, Borel–Laplace summation and the `a·e^{1/t}` sector.

mod borel;
mod real;
mod series;

use serde::Serialize;

pub use borel::{borel_sum, general_solution, ode_residual, DEFAULT_TOLERANCE, MAX_LEVEL};
pub use real::{abs_real, fmt_real, parse_decimal, real_from_bigint, real_from_rational, real_int, to_f64, Real, PRECISION_BITS};
pub use series::{euler_series_partial, optimal_truncation_index, symbolic_series_residual, EulerSeries, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Method {
    PartialSum { order: usize },
    Borel { levels: u32, nodes: usize },
    General { a: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummationResult {
    pub value: Real,
    pub method: Method,
    pub error_estimate: Real,
}
