use thiserror::Error;

/// Errors raised by every module of the crate.
///
/// Each variant maps onto a stable machine-readable code (see [`Error::code`])
/// which the command-line front end reports verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("operands use different primes ({0} and {1})")]
    MixedPrimes(u64, u64),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("zero is not allowed here: {0}")]
    ZeroArgument(String),
    #[error("{0}")]
    Domain(String),
    #[error("x0 = {x0} is not a root of the polynomial modulo {p}")]
    NotARoot { x0: String, p: u64 },
    #[error("x0 = {x0} is a singular root (f'(x0) = 0 mod {p}); simple Hensel lifting does not apply")]
    SingularRoot { x0: String, p: u64 },
    #[error("{0} is not encodable: its denominator is divisible by {1}")]
    NotEncodable(String, u64),
    #[error("residue {value} has no rational representative with numerator and denominator at most {bound}")]
    DecodeFailure { value: String, bound: String },
    #[error("operands have different shapes: {0}")]
    Mismatch(String),
    #[error("matrix is not unitary up to a global scalar")]
    NotUnitary,
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("quadrature did not converge (achieved error estimate {0:e})")]
    Accuracy(f64),
    #[error("value out of range: {0}")]
    Range(String),
}

impl Error {
    /// Stable snake-case identifier for the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::MixedPrimes(..) => "mixed_primes",
            Error::NotInvertible(_) => "not_invertible",
            Error::ZeroArgument(_) => "zero_argument",
            Error::Domain(_) => "domain",
            Error::NotARoot { .. } => "not_a_root",
            Error::SingularRoot { .. } => "singular_root",
            Error::NotEncodable(..) => "not_encodable",
            Error::DecodeFailure { .. } => "decode_failure",
            Error::Mismatch(_) => "mismatch",
            Error::NotUnitary => "not_unitary",
            Error::NotALattice(_) => "not_a_lattice",
            Error::UnsupportedFormat(_) => "unsupported_format",
            Error::Parse(_) => "parse",
            Error::ResourceLimit(_) => "resource_limit",
            Error::Accuracy(_) => "accuracy",
            Error::Range(_) => "range",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
