//! Lifting simple roots of integer polynomials from `ℤ/p` to `ℤ/p^k`.
//!
//! The lift is computed one base-`p` digit at a time: given a root `x_{i-1}`
//! modulo `p^i`, the next digit is
//! `b_i = -(f(x_{i-1}) / p^i) · f'(x₀)⁻¹ mod p` and `x_i = x_{i-1} + b_i p^i`.
//! For `x² - 2` over `ℤ₇` starting from `3` this gives the digits `3, 1, 2`
//! and residues `3, 10, 108`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{mod_inverse, Prime};
use crate::padic::PadicNumber;
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// The coherent sequence `x₀, x₁, …, x_k` with `f(x_i) ≡ 0 mod p^{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftTrace {
    pub p: Prime,
    pub poly: IntPolynomial,
    /// Base-`p` digits `b₀, …, b_k`.
    pub digits: Vec<u64>,
    /// `x_i = Σ_{j≤i} b_j p^j`.
    pub residues: Vec<BigInt>,
}

impl LiftTrace {
    /// Modulus `p^{i+1}` attached to each residue.
    pub fn moduli(&self) -> Vec<BigInt> {
        let p = self.p.to_bigint();
        (1..=self.residues.len()).map(|e| num_traits::pow(p.clone(), e)).collect()
    }

    /// Renders the last residue as a digit sum, e.g. `3 + 7·1 + 7²·2`.
    pub fn render_sum(&self) -> String {
        let p = self.p;
        self.digits
            .iter()
            .enumerate()
            .map(|(i, d)| match i {
                0 => d.to_string(),
                1 => format!("{p}·{d}"),
                _ => format!("{p}{}·{d}", superscript(i)),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// The final residue as a p-adic integer with `k + 1` digits.
    pub fn to_padic(&self) -> PadicNumber {
        let last = self.residues.last().expect("trace is never empty");
        PadicNumber::from_integer(last, self.p, self.residues.len()).expect("precision >= 1")
    }
}

fn superscript(n: usize) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().bytes().map(|b| SUP[(b - b'0') as usize]).collect()
}

/// All `x ∈ [0, p)` with `f(x) ≡ 0 mod p`, by exhaustive evaluation.
pub fn roots_mod_p(f: &IntPolynomial, p: Prime) -> Result<Vec<u64>> {
    let pb = p.to_bigint();
    if f.vanishes_mod(&pb) {
        return Err(Error::Domain(format!(
            "{f} vanishes identically modulo {p}; every residue is a root"
        )));
    }
    Ok((0..p.get())
        .filter(|&x| f.eval_mod(&BigInt::from(x), &pb).is_zero())
        .collect())
}

fn check_simple_root(f: &IntPolynomial, x0: &BigInt, p: Prime) -> Result<BigInt> {
    let pb = p.to_bigint();
    if !f.eval_mod(x0, &pb).is_zero() {
        return Err(Error::NotARoot { x0: x0.to_string(), p: p.get() });
    }
    let d = f.derivative().eval_mod(x0, &pb);
    mod_inverse(&d, &pb).ok_or_else(|| Error::SingularRoot { x0: x0.to_string(), p: p.get() })
}

/// Lifts the simple root `x0` of `f` modulo `p` to a root modulo `p^{k+1}`,
/// recording every intermediate residue.
pub fn hensel_lift(f: &IntPolynomial, x0: &BigInt, p: Prime, k: usize) -> Result<LiftTrace> {
    let pb = p.to_bigint();
    let x0 = x0.mod_floor(&pb);
    let inv = check_simple_root(f, &x0, p)?;

    let mut digits = vec![x0.to_u64().expect("digit below p")];
    let mut residues = vec![x0.clone()];
    let mut x = x0;
    let mut pi = pb.clone();
    for _ in 1..=k {
        let (quot, rem) = f.eval(&x).div_rem(&pi);
        debug_assert!(rem.is_zero());
        let b = (-quot * &inv).mod_floor(&pb);
        x += &b * &pi;
        pi *= &pb;
        digits.push(b.to_u64().expect("digit below p"));
        residues.push(x.clone());
    }
    Ok(LiftTrace { p, poly: f.clone(), digits, residues })
}

/// Newton iteration `x ← x - f(x)/f'(x)` with doubling precision; returns the
/// root modulo `p^{k+1}`. Must agree with [`hensel_lift`].
pub fn newton_lift(f: &IntPolynomial, x0: &BigInt, p: Prime, k: usize) -> Result<BigInt> {
    let pb = p.to_bigint();
    let mut x = x0.mod_floor(&pb);
    check_simple_root(f, &x, p)?;
    let target = k + 1;
    let df = f.derivative();
    let mut prec = 1;
    while prec < target {
        prec = (2 * prec).min(target);
        let m = num_traits::pow(pb.clone(), prec);
        let inv = mod_inverse(&df.eval_mod(&x, &m), &m).expect("f'(x) is a unit");
        x = (&x - f.eval_mod(&x, &m) * inv).mod_floor(&m);
    }
    Ok(x)
}

/// The square roots of `a` in `ℤ_p` to `r` digits: none, or a pair `±x`.
pub fn sqrt_padic(a: &BigInt, p: Prime, r: usize) -> Result<Vec<PadicNumber>> {
    if p.get() == 2 {
        return Err(Error::Domain("p-adic square roots need an odd prime".into()));
    }
    if r == 0 {
        return Err(Error::Domain("precision must be at least one digit".into()));
    }
    if a.mod_floor(&p.to_bigint()).is_zero() {
        return Err(Error::Domain(format!("{a} is not prime to {p}")));
    }
    let f = IntPolynomial::new(vec![-a.clone(), BigInt::zero(), BigInt::from(1)]);
    roots_mod_p(&f, p)?
        .into_iter()
        .map(|x0| hensel_lift(&f, &BigInt::from(x0), p, r - 1).map(|t| t.to_padic()))
        .collect()
}

/// Serializable view of a trace for the command line.
#[derive(Debug, Serialize)]
pub struct TraceReport {
    pub p: u64,
    pub poly: String,
    pub digits: Vec<u64>,
    pub residues: Vec<String>,
    pub moduli: Vec<String>,
    pub sum: String,
}

impl From<&LiftTrace> for TraceReport {
    fn from(t: &LiftTrace) -> Self {
        TraceReport {
            p: t.p.get(),
            poly: t.poly.to_string(),
            digits: t.digits.clone(),
            residues: t.residues.iter().map(ToString::to_string).collect(),
            moduli: t.moduli().iter().map(ToString::to_string).collect(),
            sum: t.render_sum(),
        }
    }
}
