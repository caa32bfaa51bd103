use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::factor::factor;
use super::fq::{multiplicity, FqPolynomial, IrreducibleTable, RationalFunction};
use crate::arith::{rational_pow, ExactRational};
use crate::padic::Valuation;
use crate::{Error, Result};

/// A place of `ℚ` or of `𝔽_p(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Place {
    /// A rational prime from factorization; unlike [`Prime`] it is not
    /// limited to the modulus bound.
    FinitePrime(u64),
    ArchimedeanInfinity,
    /// A monic irreducible polynomial.
    FinitePoly(FqPolynomial),
    /// The place at infinity of `𝔽_p(x)`, measuring degree.
    DegreeInfinity,
}

impl Place {
    /// Checks that `g` is monic and irreducible before wrapping it.
    pub fn finite_poly(g: FqPolynomial) -> Result<Self> {
        if !g.is_monic() || g.degree().unwrap_or(0) == 0 {
            return Err(Error::Domain(format!("{g} is not a monic non-constant polynomial")));
        }
        if !IrreducibleTable::new(g.prime()).is_irreducible(&g)? {
            return Err(Error::Domain(format!("{g} is reducible over F_{}", g.prime())));
        }
        Ok(Place::FinitePoly(g))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::FinitePrime(p) => write!(f, "{p}"),
            Place::ArchimedeanInfinity | Place::DegreeInfinity => f.write_str("inf"),
            Place::FinitePoly(g) => write!(f, "{g}"),
        }
    }
}

/// One row of a place-by-place norm table. The archimedean place carries no
/// valuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalNorm {
    pub place: Place,
    pub valuation: Option<Valuation>,
    pub norm: ExactRational,
}

/// JSON row `{place, valuation, norm_num, norm_den}`.
#[derive(Debug, Serialize)]
pub struct LocalNormRow {
    pub place: String,
    pub valuation: Option<Valuation>,
    pub norm_num: String,
    pub norm_den: String,
}

impl From<&LocalNorm> for LocalNormRow {
    fn from(l: &LocalNorm) -> Self {
        LocalNormRow {
            place: l.place.to_string(),
            valuation: l.valuation,
            norm_num: l.norm.numer().to_string(),
            norm_den: l.norm.denom().to_string(),
        }
    }
}

/// Every finite place where `|a|_p ≠ 1`, by increasing prime, followed by the
/// archimedean place.
pub fn local_norms(a: &ExactRational) -> Result<Vec<LocalNorm>> {
    if a.is_zero() {
        return Err(Error::ZeroArgument("the product formula needs a nonzero rational".into()));
    }
    let num = factor(a.numer())?;
    let den = factor(a.denom())?;
    let mut exps: std::collections::BTreeMap<u64, i64> = Default::default();
    for (&p, &e) in &num.factors {
        *exps.entry(p).or_default() += e as i64;
    }
    for (&p, &e) in &den.factors {
        *exps.entry(p).or_default() -= e as i64;
    }
    let mut rows: Vec<LocalNorm> = exps
        .into_iter()
        .filter(|&(_, v)| v != 0)
        .map(|(p, v)| LocalNorm {
            place: Place::FinitePrime(p),
            valuation: Some(Valuation::Finite(v)),
            norm: rational_pow(p, -v),
        })
        .collect();
    rows.push(LocalNorm { place: Place::ArchimedeanInfinity, valuation: None, norm: a.abs() });
    Ok(rows)
}

fn product(rows: &[LocalNorm]) -> ExactRational {
    rows.iter().fold(BigRational::one(), |acc, r| acc * &r.norm)
}

/// `∏_v |a|_v` over all places of `ℚ`; equals `1` for every nonzero `a`.
pub fn product_formula_check(a: &ExactRational) -> Result<ExactRational> {
    Ok(product(&local_norms(a)?))
}

/// `ν_𝔭(f)` at a finite polynomial place or at the degree place.
pub fn poly_valuation(f: &RationalFunction, place: &Place) -> Result<Valuation> {
    match place {
        Place::FinitePoly(g) => {
            if g.prime() != f.prime() {
                return Err(Error::MixedPrimes(g.prime().get(), f.prime().get()));
            }
            let v = multiplicity(&f.num, g) as i64 - multiplicity(&f.den, g) as i64;
            Ok(Valuation::Finite(v))
        }
        Place::DegreeInfinity => Ok(Valuation::Finite(degree_gap(f))),
        _ => Err(Error::Domain(format!("{place} is not a place of F_p(x)"))),
    }
}

fn degree_gap(f: &RationalFunction) -> i64 {
    f.den.degree().expect("nonzero") as i64 - f.num.degree().expect("nonzero") as i64
}

/// Norms of `f ∈ 𝔽_p(x)` at every place where they differ from 1, with
/// `|f|_𝔭 = p^{−deg(𝔭)·ν_𝔭(f)}` and `|f|_∞ = p^{deg num − deg den}`. The degree
/// place is always listed last.
pub fn local_norms_ff(f: &RationalFunction) -> Result<Vec<LocalNorm>> {
    let p = f.prime();
    let mut table = IrreducibleTable::new(p);
    let (_, num) = table.factor(&f.num)?;
    let (_, den) = table.factor(&f.den)?;
    let mut exps: std::collections::BTreeMap<FqPolynomial, i64> = Default::default();
    for (g, e) in num {
        *exps.entry(g).or_default() += e as i64;
    }
    for (g, e) in den {
        *exps.entry(g).or_default() -= e as i64;
    }
    let mut rows: Vec<LocalNorm> = exps
        .into_iter()
        .filter(|(_, v)| *v != 0)
        .map(|(g, v)| {
            let deg = g.degree().expect("non-constant") as i64;
            LocalNorm {
                norm: rational_pow(p.get(), -deg * v),
                valuation: Some(Valuation::Finite(v)),
                place: Place::FinitePoly(g),
            }
        })
        .collect();
    let v_inf = degree_gap(f);
    rows.push(LocalNorm {
        place: Place::DegreeInfinity,
        valuation: Some(Valuation::Finite(v_inf)),
        norm: rational_pow(p.get(), -v_inf),
    });
    Ok(rows)
}

/// `∏_𝔭 |f|_𝔭` over all places of `𝔽_p(x)`; equals `1` for every nonzero `f`.
pub fn product_formula_check_ff(f: &RationalFunction) -> Result<ExactRational> {
    Ok(product(&local_norms_ff(f)?))
}
