//! Dense linear algebra over finite fields: matrices, canonical
//! subspaces, exterior/symmetric squares, spinning, irreducibility by
//! exhaustive projective enumeration, and intertwiner-space solving.
//!
//! Conventions used throughout the crate:
//!
//! * vectors are **rows** and linear maps act on the **right**:
//!   the image of `v` under `M` is `v * M`, and row `i` of `M` is the
//!   image of the `i`-th basis vector;
//! * [`rref_solve`](Matrix::rref_solve) is the one column-convention
//!   entry point: it solves `M x = rhs` and returns the right kernel;
//! * the basis of an exterior square is `{e_i ^ e_j : i < j}` in
//!   lexicographic order of `(i, j)`; see [`pair_index`].

mod matrix;
mod module;
pub mod subspace;

pub use matrix::{Matrix, SolveOutcome, SolveReport};
pub use module::{hom_module_space, spin_matrices, ModuleRep};
pub use subspace::{
    all_subspaces, all_vectors, projective_count, projective_rep_at, projective_reps,
    subspaces_of_dim, Subspace,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("generator counts differ ({left} vs {right})")]
    GeneratorCountMismatch { left: usize, right: usize },
    #[error("{points} projective points exceed the exhaustive budget {budget}")]
    TooLargeForExhaustive { points: u128, budget: u128 },
    #[error("operands belong to different fields")]
    FieldMismatch,
}

/// Default cap on projective points for exhaustive irreducibility.
pub const PROJECTIVE_BUDGET: u128 = 1_000_000;

/// Index of `e_i ^ e_j` (`i < j`) in the lexicographic basis of the
/// exterior square of a `d`-dimensional space.
#[inline]
pub fn pair_index(i: usize, j: usize, d: usize) -> usize {
    debug_assert!(i < j && j < d);
    i * d - i * (i + 1) / 2 + (j - i - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_unindex(mut idx: usize, d: usize) -> (usize, usize) {
    for i in 0..d {
        let row = d - i - 1;
        if idx < row {
            return (i, i + 1 + idx);
        }
        idx -= row;
    }
    panic!("pair index out of range");
}

#[cfg(test)]
mod pair_tests {
    use super::*;

    #[test]
    fn pair_index_roundtrip() {
        for d in 2..8 {
            let mut expect = 0;
            for i in 0..d {
                for j in (i + 1)..d {
                    assert_eq!(pair_index(i, j, d), expect);
                    assert_eq!(pair_unindex(expect, d), (i, j));
                    expect += 1;
                }
            }
            assert_eq!(expect, d * (d - 1) / 2);
        }
    }
}
