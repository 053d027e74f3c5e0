//! Exact linear algebra: dense rational elimination, integer lattices in
//! Hermite normal form, and Smith normal form of small integer matrices.

mod lattice;
mod rational;
mod smith;

pub use lattice::Lattice;
pub use rational::{
    identity, kernel, left_kernel, mat_mul, mat_vec, rank, rref, scale_to_primitive_integers,
    transpose, Rational, SparseEchelon,
};
pub use smith::{smith_normal_form, SmithForm};
