//! Exact linear algebra over a [`Field`](crate::field::Field): ranks,
//! kernels, quotient spaces and induced maps.
//!
//! Pivoting is deterministic throughout (leftmost column, topmost row), so
//! every basis produced here is reproducible.

mod matrix;
mod quotient;
mod sparse;

pub use matrix::{Matrix, Rref};
pub use quotient::{induced_map, QuotientSpace};
pub use sparse::{SparseMatrix, SparseVec};

use crate::field::Field;

/// Rank of a matrix.
pub fn mat_rank<F: Field>(m: &Matrix<F>) -> usize {
    m.rank()
}

/// Basis of the right kernel, one column per free variable.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    m.kernel_basis()
}

/// Quotient of `K^ambient_dim` by the column span of `span`.
pub fn quotient_space<F: Field>(
    ambient_dim: usize,
    span: &Matrix<F>,
) -> crate::Result<QuotientSpace<F>> {
    QuotientSpace::new(ambient_dim, span)
}
