//! The Gauss norm on Q[x] is a multiplicative seminorm; the coefficient sup norm is not.

use num_rational::BigRational;
use num_traits::Signed;
use padiclab::arith::fmt_rational;
use padiclab::padic::{check_seminorm_axioms, gauss_norm, RationalPolynomial};
use padiclab::Prime;

fn poly(cs: &[(i64, i64)]) -> RationalPolynomial {
    RationalPolynomial::new(cs.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect())
}

fn main() -> padiclab::Result<()> {
    let p = Prime::new(3)?;
    let samples = vec![poly(&[(1, 1), (1, 1)]), poly(&[(-1, 3), (1, 3)]), poly(&[(9, 1), (0, 1), (2, 5)])];
    for f in &samples {
        println!("|{f}|_3 = {}", fmt_rational(&gauss_norm(f, p)));
    }

    let report = check_seminorm_axioms(|f| gauss_norm(f, p), &samples);
    println!("gauss: all axioms hold = {}", report.all_passed());

    let sup = |f: &RationalPolynomial| f.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    let report = check_seminorm_axioms(sup, &samples);
    for c in &report.checks {
        println!("sup:   {:?} passed = {}", c.axiom, c.passed);
    }
    Ok(())
}
