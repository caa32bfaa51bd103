//! Valuations, local norms and the product formula over Q and F_p(x).

use padiclab::arith::{fmt_rational, parse_rational};
use padiclab::padic::{nu, norm, RationalPlace};
use padiclab::places::{factor, local_norms, local_norms_ff, product_formula_check, RationalFunction};
use padiclab::Prime;

fn main() -> padiclab::Result<()> {
    let a = parse_rational("63/550")?;
    println!("63 = {}, 550 = {}", factor(a.numer())?, factor(a.denom())?);
    for p in [2, 3, 5, 7, 11, 13] {
        let p = Prime::new(p)?;
        println!("  nu_{p} = {:>3}   |a|_{p} = {}", nu(&a, p).to_string(), fmt_rational(&norm(&a, RationalPlace::Prime(p))));
    }
    println!("  |a|_inf = {}", fmt_rational(&norm(&a, RationalPlace::Infinity)));

    let rows = local_norms(&a)?;
    println!("{} places with |a| != 1, product = {}", rows.len(), fmt_rational(&product_formula_check(&a)?));

    let p = Prime::new(3)?;
    let f = RationalFunction::parse("x^3+2x+1 / x^2+1", p)?;
    println!("\nf = {f} over F_3");
    let mut product = num_rational::BigRational::from_integer(1.into());
    for l in local_norms_ff(&f)? {
        println!("  {:<12} {}", l.place.to_string(), fmt_rational(&l.norm));
        product *= &l.norm;
    }
    println!("  product = {}", fmt_rational(&product));
    Ok(())
}
