//! Lifting the root 3 of x^2 - 2 from Z/7 to Z/7^k, and p-adic square roots.

use num_bigint::BigInt;
use padiclab::hensel::{hensel_lift, newton_lift, roots_mod_p, sqrt_padic};
use padiclab::padic::to_expansion_string;
use padiclab::poly::IntPolynomial;
use padiclab::Prime;

fn main() -> padiclab::Result<()> {
    let f: IntPolynomial = "x^2-2".parse()?;
    let p = Prime::new(7)?;
    println!("roots of {f} mod {p}: {:?}", roots_mod_p(&f, p)?);

    let trace = hensel_lift(&f, &BigInt::from(3), p, 5)?;
    for (x, m) in trace.residues.iter().zip(trace.moduli()) {
        println!("  x = {x:<8} f(x) mod {m} = {}", f.eval_mod(x, &m));
    }
    println!("  {}", trace.render_sum());
    println!("  newton agrees: {}", newton_lift(&f, &BigInt::from(3), p, 5)? == *trace.residues.last().unwrap());

    for r in sqrt_padic(&BigInt::from(2), p, 6)? {
        println!("sqrt(2) in Z_7: {}", to_expansion_string(&r)?);
    }
    Ok(())
}
