//! Exact non-Archimedean arithmetic toolkit.
//!
//! * [`padic`]: p-adic numbers at fixed precision, valuations, norms, digit
//!   expansions and Gauss norms on polynomial rings.
//! * [`places`]: the product formula over all places of the rationals and of
//!   the rational function field over a prime field.
//! * [`hensel`]: digit-by-digit lifting of simple roots modulo prime powers.
//! * [`codes`]: r-digit Hensel codes with rational reconstruction.
//! * [`quantum`]: the Pauli group, Clifford normalizer checks and finite
//!   lattices (modular but not distributive subspace lattices).
//! * [`resurgence`]: the divergent Euler series, optimal truncation and its
//!   Borel sum.
//! * [`cli`]: the `padiclab` command-line front end.

pub mod arith;
pub mod cli;
pub mod codes;
mod error;
pub mod hensel;
pub mod padic;
pub mod places;
pub mod poly;
pub mod quantum;
pub mod resurgence;

pub use arith::{ExactRational, Prime};
pub use error::{Error, Result};
