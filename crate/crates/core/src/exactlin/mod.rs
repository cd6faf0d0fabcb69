//! Exact linear algebra over Q and F_p, and integer normal forms.

mod field;
mod integer;
mod matrix;
mod sparse;

pub use field::{is_prime, FieldSpec, Scalar, MAX_PRIME};
pub use integer::{lattice_membership, IntegerMatrix, SmithForm};
pub use matrix::{Matrix, Rref};
pub use sparse::{axpy, SparseEchelon, SparseVec};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a supported prime (need a prime below 2^31)")]
    NotPrime(u64),
}
