//! Subspace lattices are modular but not distributive; N5 is not even modular.

use padiclab::quantum::{check_lattice_axioms, is_distributive, is_modular, subspace_lattice, FiniteLattice, LawCheck};
use padiclab::Prime;

fn show(name: &str, l: &FiniteLattice) {
    let fmt = |c: LawCheck| match c.witness {
        None => "holds".to_string(),
        Some(w) => format!("fails at a={}, b={}, c={} ({} vs {})", w.a, w.b, w.c, w.lhs, w.rhs),
    };
    println!("{name} ({} elements)", l.len());
    println!("  axioms:       {}", fmt(check_lattice_axioms(l)));
    println!("  modular:      {}", fmt(is_modular(l)));
    println!("  distributive: {}", fmt(is_distributive(l)));
}

fn main() -> padiclab::Result<()> {
    for (q, d) in [(2, 2), (3, 2), (2, 3)] {
        let s = subspace_lattice(Prime::new(q)?, d)?;
        show(&format!("subspaces of F_{q}^{d}"), s.lattice());
    }
    show("N5", &FiniteLattice::pentagon());
    show("M3", &FiniteLattice::diamond());
    show("2^3", &FiniteLattice::boolean(3)?);
    Ok(())
}
