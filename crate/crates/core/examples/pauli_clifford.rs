//! The Pauli group in symplectic form and Clifford normalizer checks.

use padiclab::quantum::{is_in_normalizer, pauli_basis_check, pauli_group_order, GaussianMatrix, PauliElement};

fn main() -> padiclab::Result<()> {
    let x: PauliElement = "X".parse()?;
    let z: PauliElement = "Z".parse()?;
    println!("XZ = {}, ZX = {}", x.mul(&z)?, z.mul(&x)?);
    let xz: PauliElement = "XZ".parse()?;
    let zx: PauliElement = "ZX".parse()?;
    println!("(XZ)(ZX) = {}", xz.mul(&zx)?);

    println!("|P_1| = {}, |P_2| = {}", pauli_group_order(1)?, pauli_group_order(2)?);
    let basis = pauli_basis_check();
    println!("sigma basis: rank {}, spanning {}", basis.rank, basis.spanning);

    for (name, m, n) in [
        ("H", "1,1;1,-1", 1),
        ("S", "1,0;0,i", 1),
        ("CNOT", "1,0,0,0;0,1,0,0;0,0,0,1;0,0,1,0", 2),
        ("diag(1, 3/5+4/5i)", "1,0;0,3/5+4/5i", 1),
    ] {
        let u: GaussianMatrix = m.parse()?;
        let report = is_in_normalizer(&u, n)?;
        let images: Vec<String> = report
            .conjugations
            .iter()
            .map(|c| format!("{} -> {}", c.generator, c.image.as_ref().map_or("none".into(), |p| p.to_string())))
            .collect();
        println!("{name:<18} member={:<5} {}", report.member, images.join(", "));
    }
    Ok(())
}
