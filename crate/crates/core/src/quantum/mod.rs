//! Pauli-group algebra, Clifford normalizer checks and finite lattices.

mod clifford;
mod lattice;
mod matrix;
mod pauli;
mod subspace;

pub use clifford::{is_in_normalizer, Conjugation, NormalizerReport};
pub use lattice::{check_lattice_axioms, is_distributive, is_modular, FiniteLattice, Law, LawCheck, LawWitness};
pub use matrix::{fmt_gaussian, gr, parse_gaussian, GaussianMatrix, GaussianRational};
pub use pauli::{
    closure_order, decompose, identify, pauli_basis_check, pauli_group_order, recompose, sigma_matrices,
    standard_generators, BasisReport, PauliElement,
};
pub use subspace::{gaussian_binomial_sum, subspace_lattice, Subspace, SubspaceLattice, MAX_AMBIENT_SIZE, MAX_SUBSPACES};
