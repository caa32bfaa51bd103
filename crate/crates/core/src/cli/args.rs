use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "padiclab", version, about = "Exact p-adic, adelic, quantum-logic and resurgence computations")]
pub struct Cli {
    /// Emit a single-line JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PrimeArg {
    /// A prime p
    #[arg(long)]
    pub p: u64,
}

#[derive(Debug, Args)]
pub struct PrecisionArg {
    /// Number of p-adic digits
    #[arg(long, env = "PADICLAB_PRECISION", default_value_t = 8)]
    pub r: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Comma-notation p-adic expansion "a0,a1a2..." of a rational
    Expand {
        #[arg(allow_hyphen_values = true)]
        value: String,
        #[command(flatten)]
        prime: PrimeArg,
        #[command(flatten)]
        precision: PrecisionArg,
    },
    /// p-adic valuation of a rational
    Valuation {
        #[arg(allow_hyphen_values = true)]
        value: String,
        #[command(flatten)]
        prime: PrimeArg,
    },
    /// Absolute value of a rational at a prime or at "inf"
    Norm {
        #[arg(allow_hyphen_values = true)]
        value: String,
        /// A prime, or "inf" for the archimedean place
        #[arg(long)]
        p: String,
    },
    /// Digit-by-digit Hensel lifting of a simple root
    Hensel {
        /// Integer polynomial in x, e.g. "x^2-2"
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        prime: PrimeArg,
        /// Number of lifting steps (the result is known modulo p^(k+1))
        #[arg(long)]
        k: usize,
        /// Root modulo p to lift; every root is lifted when omitted
        #[arg(long, allow_hyphen_values = true)]
        x0: Option<String>,
    },
    /// p-adic square roots of an integer (odd p, p not dividing a)
    Sqrt {
        #[arg(allow_hyphen_values = true)]
        value: String,
        #[command(flatten)]
        prime: PrimeArg,
        #[command(flatten)]
        precision: PrecisionArg,
    },
    /// Place-by-place norms and their product
    ProductFormula {
        /// A rational, or "num / den" over F_p with --function-field
        #[arg(allow_hyphen_values = true)]
        value: String,
        /// Work in F_p(x) instead of Q
        #[arg(long, requires = "p")]
        function_field: bool,
        /// Characteristic of the function field
        #[arg(long)]
        p: Option<u64>,
    },
    /// Hensel codes: finite-segment p-adic arithmetic on rationals
    Code {
        #[command(subcommand)]
        op: CodeOp,
    },
    /// Pauli group algebra and Clifford normalizer checks
    Pauli {
        #[command(subcommand)]
        op: PauliOp,
    },
    /// Finite lattice identities
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
    /// Summation of the divergent Euler series
    Borel(BorelArgs),
    /// Seminorm axioms for the Gauss norm on Q[x]
    SeminormCheck(SeminormArgs),
}

#[derive(Debug, Args)]
pub struct CodeParams {
    #[command(flatten)]
    pub prime: PrimeArg,
    #[command(flatten)]
    pub precision: PrecisionArg,
}

#[derive(Debug, Subcommand)]
pub enum CodeOp {
    /// Hensel code of a rational
    Encode {
        #[arg(allow_hyphen_values = true)]
        value: String,
        #[command(flatten)]
        params: CodeParams,
    },
    /// Rational reconstruction of a residue modulo p^r
    Decode {
        value: String,
        #[command(flatten)]
        params: CodeParams,
    },
    Add(BinaryCode),
    Sub(BinaryCode),
    Mul(BinaryCode),
    Div(BinaryCode),
}

#[derive(Debug, Args)]
pub struct BinaryCode {
    #[arg(allow_hyphen_values = true)]
    pub a: String,
    #[arg(allow_hyphen_values = true)]
    pub b: String,
    /// Treat operands as residues modulo p^r rather than rationals
    #[arg(long)]
    pub residue: bool,
    #[command(flatten)]
    pub params: CodeParams,
}

#[derive(Debug, Subcommand)]
pub enum PauliOp {
    /// Product of two Pauli strings such as "iXZ" and "-Y"
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Group order by closure enumeration
    Order {
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Exact basis check of the one-qubit Pauli matrices
    BasisCheck {
        /// Also decompose this 2x2 matrix, rows separated by ';'
        #[arg(long, allow_hyphen_values = true)]
        decompose: Option<String>,
    },
    /// Does U normalize the Pauli group?
    NormalizerCheck {
        /// Matrix with entries a+bi, rows separated by ';', e.g. "1,1;1,-1"
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum LatticeOp {
    /// Axioms, modularity and distributivity of a lattice
    Check(LatticeArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct LatticeArgs {
    /// Subspaces of F_q^d
    #[arg(long, num_args = 2, value_names = ["Q", "D"])]
    pub subspace: Option<Vec<u64>>,
    /// n5, m3, boolean K or chain K
    #[arg(long, num_args = 1..=2, value_names = ["NAME", "K"])]
    pub named: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct BorelArgs {
    /// t > 0, as a decimal or a fraction
    #[arg(long, allow_hyphen_values = true)]
    pub t: String,
    /// Use the partial sum S_N instead of the Borel sum (largest N in table mode)
    #[arg(long)]
    pub order: Option<usize>,
    /// Coefficient of the homogeneous solution e^(1/t)
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Emit rows (N, S_N, |S_N - y_B|)
    #[arg(long)]
    pub table: bool,
    /// Relative tolerance for the quadrature
    #[arg(long, env = "PADICLAB_TOLERANCE", default_value_t = 1e-10)]
    pub tolerance: f64,
}

#[derive(Debug, Args)]
pub struct SeminormArgs {
    #[command(flatten)]
    pub prime: PrimeArg,
    /// Sample polynomial, "f" or "f / d"; repeatable
    #[arg(long = "poly", allow_hyphen_values = true)]
    pub polys: Vec<String>,
    /// Number of random samples when no --poly is given
    #[arg(long, default_value_t = 12)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// gauss, or sup for the archimedean coefficient maximum
    #[arg(long, default_value = "gauss")]
    pub norm: String,
}
