//! Digit expansions and fixed-precision p-adic arithmetic.

use num_bigint::BigInt;
use padiclab::arith::parse_rational;
use padiclab::padic::{parse_expansion_string, to_expansion_string, PadicNumber};
use padiclab::Prime;

fn main() -> padiclab::Result<()> {
    for p in [2, 3, 5] {
        let p = Prime::new(p)?;
        let x = PadicNumber::from_integer(&BigInt::from(216), p, 8)?;
        println!("216 in Z_{p}: {}", to_expansion_string(&x)?);
    }

    let p = Prime::new(5)?;
    let third = PadicNumber::from_rational(&parse_rational("1/3")?, p, 6)?;
    let minus_one = PadicNumber::from_integer(&BigInt::from(-1), p, 6)?;
    println!("1/3  = {third}");
    println!("-1   = {minus_one}");
    println!("1/3 - 1 = {}", third.add(&minus_one)?);
    println!("(1/3)^-1 = {}", third.inv()?);

    // 5-adic numbers with negative valuation have digits after the point
    let q = PadicNumber::from_rational(&parse_rational("7/25")?, p, 4)?;
    println!("7/25 = {q}, |7/25|_5 = {}", q.norm());

    let back = parse_expansion_string("1,331", p, 4)?;
    println!("\"1,331\" parses to {back}");
    Ok(())
}
