//! The n-qubit Pauli group in symplectic form.
//!
//! An element is `i^phase · ⊗_j X^{x_j} Z^{z_j}`. Multiplication only needs
//! the commutation sign: moving `Z^{z}` past `X^{x}` contributes `(−1)^{zx}`,
//! so the product picks up `2·Σ_j z1_j x2_j` in the phase exponent.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::matrix::{gr, rank, solve, GaussianMatrix, GaussianRational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliElement {
    phase: u8,
    xbits: Vec<bool>,
    zbits: Vec<bool>,
}

impl PauliElement {
    pub fn new(phase: u8, xbits: Vec<bool>, zbits: Vec<bool>) -> Result<Self> {
        if xbits.len() != zbits.len() {
            return Err(Error::Mismatch("x and z bit vectors differ in length".into()));
        }
        Ok(PauliElement { phase: phase % 4, xbits, zbits })
    }

    pub fn identity(n: usize) -> Self {
        PauliElement { phase: 0, xbits: vec![false; n], zbits: vec![false; n] }
    }

    /// `i^k · I`.
    pub fn phase_only(n: usize, k: u8) -> Self {
        PauliElement { phase: k % 4, ..Self::identity(n) }
    }

    pub fn x(n: usize, qubit: usize) -> Self {
        let mut p = Self::identity(n);
        p.xbits[qubit] = true;
        p
    }

    pub fn z(n: usize, qubit: usize) -> Self {
        let mut p = Self::identity(n);
        p.zbits[qubit] = true;
        p
    }

    /// `Y = i·X·Z`.
    pub fn y(n: usize, qubit: usize) -> Self {
        let mut p = Self::identity(n);
        p.xbits[qubit] = true;
        p.zbits[qubit] = true;
        p.phase = 1;
        p
    }

    pub fn qubits(&self) -> usize {
        self.xbits.len()
    }

    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn xbits(&self) -> &[bool] {
        &self.xbits
    }

    pub fn zbits(&self) -> &[bool] {
        &self.zbits
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.qubits() != other.qubits() {
            return Err(Error::Mismatch(format!(
                "Pauli elements on {} and {} qubits",
                self.qubits(),
                other.qubits()
            )));
        }
        let swaps = self.zbits.iter().zip(&other.xbits).filter(|&(&z, &x)| z && x).count() as u8;
        let phase = (self.phase + other.phase + 2 * (swaps % 2)) % 4;
        let xor = |a: &[bool], b: &[bool]| a.iter().zip(b).map(|(p, q)| p ^ q).collect();
        Ok(PauliElement { phase, xbits: xor(&self.xbits, &other.xbits), zbits: xor(&self.zbits, &other.zbits) })
    }

    /// The explicit `2^n × 2^n` matrix, qubit 0 being the leftmost tensor factor.
    pub fn to_matrix(&self) -> GaussianMatrix {
        let x = GaussianMatrix::from_ints(2, &[(0, 0), (1, 0), (1, 0), (0, 0)]);
        let z = GaussianMatrix::from_ints(2, &[(1, 0), (0, 0), (0, 0), (-1, 0)]);
        let id = GaussianMatrix::identity(2);
        let mut m = GaussianMatrix::identity(1);
        for (&xb, &zb) in self.xbits.iter().zip(&self.zbits) {
            let fx = if xb { &x } else { &id };
            let fz = if zb { &z } else { &id };
            m = m.kron(&fx.mul(fz).expect("2x2"));
        }
        m.scale(&phase_scalar(self.phase))
    }

    /// Number of `Y` letters in the display form.
    fn y_count(&self) -> u8 {
        (self.xbits.iter().zip(&self.zbits).filter(|&(&x, &z)| x && z).count() % 4) as u8
    }
}

pub fn phase_scalar(k: u8) -> GaussianRational {
    match k % 4 {
        0 => gr(1, 0),
        1 => gr(0, 1),
        2 => gr(-1, 0),
        _ => gr(0, -1),
    }
}

/// Letters `I X Y Z` per qubit with a phase prefix among `""`, `"i"`, `"-"`,
/// `"-i"`; `Y` stands for the Hermitian Pauli matrix.
impl fmt::Display for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = (self.phase + 4 - self.y_count()) % 4;
        f.write_str(["", "i", "-", "-i"][shown as usize])?;
        for (&x, &z) in self.xbits.iter().zip(&self.zbits) {
            f.write_str(match (x, z) {
                (false, false) => "I",
                (true, false) => "X",
                (true, true) => "Y",
                (false, true) => "Z",
            })?;
        }
        Ok(())
    }
}

impl FromStr for PauliElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (prefix, letters) = t.split_at(t.find(['I', 'X', 'Y', 'Z']).unwrap_or(t.len()));
        let phase = match prefix {
            "" | "+" => 0,
            "i" | "+i" => 1,
            "-" => 2,
            "-i" => 3,
            _ => return Err(Error::Parse(format!("invalid Pauli phase `{prefix}` in `{s}`"))),
        };
        if letters.is_empty() {
            return Err(Error::Parse(format!("Pauli string `{s}` has no qubits")));
        }
        let n = letters.len();
        let mut p = PauliElement::phase_only(n, phase);
        for (j, c) in letters.chars().enumerate() {
            let factor = match c {
                'I' => continue,
                'X' => PauliElement::x(n, j),
                'Y' => PauliElement::y(n, j),
                'Z' => PauliElement::z(n, j),
                _ => return Err(Error::Parse(format!("invalid Pauli letter `{c}` in `{s}`"))),
            };
            p = p.mul(&factor)?;
        }
        Ok(p)
    }
}

/// `i·I`, `X_j` and `Z_j` for every qubit.
pub fn standard_generators(n: usize) -> Vec<PauliElement> {
    let mut gens = vec![PauliElement::phase_only(n, 1)];
    for j in 0..n {
        gens.push(PauliElement::x(n, j));
        gens.push(PauliElement::z(n, j));
    }
    gens
}

/// Size of the group generated by `gens`, by breadth-first closure.
pub fn closure_order(gens: &[PauliElement]) -> Result<usize> {
    let Some(first) = gens.first() else {
        return Ok(1);
    };
    let id = PauliElement::identity(first.qubits());
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for h in gens {
            let gh = g.mul(h)?;
            if seen.insert(gh.clone()) {
                queue.push_back(gh);
            }
        }
    }
    Ok(seen.len())
}

/// Order of the n-qubit Pauli group by explicit closure (`n ∈ {1, 2}`).
pub fn pauli_group_order(n: usize) -> Result<usize> {
    if !(1..=2).contains(&n) {
        return Err(Error::ResourceLimit(format!("closure enumeration supports 1 or 2 qubits, got {n}")));
    }
    closure_order(&standard_generators(n))
}

/// `σ₀, σ_x, σ_y, σ_z` as explicit matrices.
pub fn sigma_matrices() -> [GaussianMatrix; 4] {
    [
        PauliElement::identity(1).to_matrix(),
        PauliElement::x(1, 0).to_matrix(),
        PauliElement::y(1, 0).to_matrix(),
        PauliElement::z(1, 0).to_matrix(),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisReport {
    pub rank: usize,
    pub independent: bool,
    pub spanning: bool,
}

/// Checks that `σ₀, σ_x, σ_y, σ_z` form a basis of the 2×2 complex matrices.
pub fn pauli_basis_check() -> BasisReport {
    let rows: Vec<Vec<GaussianRational>> = sigma_matrices().iter().map(|m| m.entries().to_vec()).collect();
    let r = rank(&rows);
    BasisReport { rank: r, independent: r == 4, spanning: r == 4 }
}

/// Coefficients `(c₀, c_x, c_y, c_z)` with `m = Σ c_k σ_k`.
pub fn decompose(m: &GaussianMatrix) -> Result<[GaussianRational; 4]> {
    if m.dim() != 2 {
        return Err(Error::Mismatch("decomposition is over 2x2 matrices".into()));
    }
    let sig = sigma_matrices();
    // column k of the system is vec(σ_k)
    let a: Vec<Vec<GaussianRational>> =
        (0..4).map(|e| sig.iter().map(|s| s.entries()[e].clone()).collect()).collect();
    let c = solve(&a, m.entries()).expect("Pauli matrices are a basis");
    Ok([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()])
}

pub fn recompose(c: &[GaussianRational; 4]) -> GaussianMatrix {
    sigma_matrices()
        .iter()
        .zip(c)
        .map(|(s, ck)| s.scale(ck))
        .fold(GaussianMatrix::zeros(2), |acc, t| {
            let entries = acc.entries().iter().zip(t.entries()).map(|(a, b)| a + b).collect::<Vec<_>>();
            GaussianMatrix::from_rows(entries.chunks(2).map(<[_]>::to_vec).collect()).expect("2x2")
        })
}

/// Finds the Pauli group element equal to `m`, if any.
pub fn identify(m: &GaussianMatrix, n: usize) -> Option<PauliElement> {
    if m.dim() != 1 << n {
        return None;
    }
    let dim = GaussianRational::new(num_rational::BigRational::from_integer((1i64 << n).into()), Zero::zero());
    for bits in 0..(1u32 << (2 * n)) {
        let xbits = (0..n).map(|j| bits >> j & 1 == 1).collect();
        let zbits = (0..n).map(|j| bits >> (n + j) & 1 == 1).collect();
        let p = PauliElement { phase: 0, xbits, zbits };
        let pm = p.to_matrix();
        let c = pm.adjoint().mul(m).ok()?.trace() / &dim;
        if c.is_zero() {
            continue;
        }
        for k in 0..4u8 {
            if c == phase_scalar(k) && pm.scale(&c) == *m {
                return Some(PauliElement { phase: k, ..p });
            }
        }
        return None;
    }
    None
}
