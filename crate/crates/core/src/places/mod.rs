//! Places of `ℚ` and of `𝔽_p(x)`, and the product formula over them.

mod factor;
mod fq;
mod product;

pub use factor::{factor, is_prime_u64, PrimeFactorization, TRIAL_DIVISION_LIMIT};
pub use fq::{
    enumerate_irreducibles, multiplicity, necklace_count, FqPolynomial, IrreducibleTable,
    RationalFunction, MAX_FACTOR_DEGREE,
};
pub use product::{
    local_norms, local_norms_ff, poly_valuation, product_formula_check, product_formula_check_ff,
    LocalNorm, LocalNormRow, Place,
};
