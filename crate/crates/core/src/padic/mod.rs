//! p-adic numbers at fixed precision, valuations and norms.

mod expansion;
mod number;
mod seminorm;
mod valuation;

pub use expansion::{parse_expansion_string, to_expansion_string};
pub use number::{reduce, represents_integer, PadicNumber};
pub use seminorm::{
    check_seminorm_axioms, gauss_norm, Axiom, AxiomCheck, RationalPolynomial, RingElement,
    SeminormReport,
};
pub use valuation::{norm, nu, nu_integer, RationalPlace, Valuation};
