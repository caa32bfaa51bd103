//! Membership in the normalizer of the Pauli group.

use num_traits::{Signed, Zero};

use super::matrix::GaussianMatrix;
use super::pauli::{identify, standard_generators, PauliElement};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugation {
    pub generator: PauliElement,
    /// `U g U⁻¹` as a Pauli element, or `None` if it left the group.
    pub image: Option<PauliElement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizerReport {
    pub member: bool,
    pub conjugations: Vec<Conjugation>,
}

impl NormalizerReport {
    /// The first generator whose image is not a Pauli element.
    pub fn witness(&self) -> Option<&PauliElement> {
        self.conjugations.iter().find(|c| c.image.is_none()).map(|c| &c.generator)
    }
}

/// Decides whether `U` normalizes the `n`-qubit Pauli group.
///
/// `U` is accepted up to a global scalar, so `U U†` must be a positive real
/// multiple of the identity (the unnormalized Hadamard `(1,1;1,−1)` qualifies).
pub fn is_in_normalizer(u: &GaussianMatrix, n: usize) -> Result<NormalizerReport> {
    if !(1..=2).contains(&n) {
        return Err(Error::ResourceLimit(format!("normalizer check supports 1 or 2 qubits, got {n}")));
    }
    if u.dim() != 1 << n {
        return Err(Error::Mismatch(format!("expected a {0}x{0} matrix, got {1}x{1}", 1 << n, u.dim())));
    }
    let u_inv = u.inverse().ok_or_else(|| Error::NotInvertible(format!("matrix {u} is singular")))?;
    let gram = u.mul(&u.adjoint())?;
    match gram.as_scalar() {
        Some(c) if c.im.is_zero() && c.re.is_positive() => {}
        _ => return Err(Error::NotUnitary),
    }
    let mut conjugations = Vec::new();
    for g in standard_generators(n).into_iter().filter(|g| g.xbits().iter().chain(g.zbits()).any(|&b| b)) {
        let image = identify(&u.mul(&g.to_matrix())?.mul(&u_inv)?, n);
        conjugations.push(Conjugation { generator: g, image });
    }
    Ok(NormalizerReport { member: conjugations.iter().all(|c| c.image.is_some()), conjugations })
}
