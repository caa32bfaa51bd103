//! Exact rational arithmetic through r-digit Hensel codes.

use padiclab::arith::{fmt_rational, parse_rational};
use padiclab::codes::{decode, encode, farey_bound};
use padiclab::Prime;

fn main() -> padiclab::Result<()> {
    let (p, r) = (Prime::new(5)?, 4);
    println!("p = {p}, r = {r}, Farey bound N = {}", farey_bound(p, r));

    let a = parse_rational("2/3")?;
    let b = parse_rational("-1/4")?;
    let (ca, cb) = (encode(&a, p, r)?, encode(&b, p, r)?);
    println!("H(2/3)  = {} digits {:?}", ca.value(), ca.digits());
    println!("H(-1/4) = {} digits {:?}", cb.value(), cb.digits());

    for (name, c) in [("+", ca.add(&cb)?), ("-", ca.sub(&cb)?), ("*", ca.mul(&cb)?), ("/", ca.div(&cb)?)] {
        let shown = decode(&c).map(|q| fmt_rational(&q)).unwrap_or_else(|e| format!("({e})"));
        println!("2/3 {name} -1/4 -> residue {:<4} decodes to {shown}", c.value());
    }

    // 1/17 * 1/16 leaves the box even though both factors are inside it
    let big = encode(&parse_rational("1/17")?, p, r)?.mul(&encode(&parse_rational("1/16")?, p, r)?)?;
    println!("1/17 * 1/16 -> residue {}: {}", big.value(), decode(&big).map(|q| fmt_rational(&q)).unwrap_or_else(|e| e.to_string()));
    Ok(())
}
