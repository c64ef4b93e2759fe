//! Eigenfunction families: the Krall–Sheffer lattice and its involution
//! image, the highest-weight `sl(2)` modules and the chains of system `C`,
//! with exact representation matrices.

mod ansatz;
mod basis;
mod checks;
mod ef;
mod hw;
mod lattice;
mod qlattice;
mod rep;

pub use ansatz::{eigen_ansatz_solve, monomials_up_to, polynomial_eigenspace};
pub use checks::{
    ef_checks, hw_checks, ladder_checks, lattice_checks, q_lattice_checks, rep_checks, ANSATZ_MAX, LATTICE_MAX,
    MODULE_MAX, Q_MAX, REP_MAX,
};
pub use basis::{coefficient_matrix, express_in_basis, span_rank};
pub use ef::{chain_eigenvalue, chain_params, chain_seed, chain_system, ef_construct, exponent_of, finite_n, EfChain};
pub use hw::{
    explicit_recursion_step, finite_dimension, generic_recursion_coefficients, highest_weight_vector, hw_construct,
    lowering, weight, HwModule,
};
pub use lattice::{
    build_lattice, build_pn0, descend_i2, lambda_n, leading_monomial_is, pn0_from_coefficients, rx_coefficients,
    ry_coefficients, ry_sequence, PolyLattice,
};
pub use qlattice::q_lattice;
pub use rep::{action_matrix, matrix_span_rank, rep_matrices, rep_matrices_on, RepMatrices};

#[cfg(test)]
mod tests;
