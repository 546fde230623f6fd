//! Explicit families of irreducible-automorphism anti-commutative
//! algebras and the machinery that produces them: deleted permutation
//! modules, exterior-self-quotient structures, the 4-dimensional
//! census, the cyclic-shift family, and symmetric-power modules of
//! SL(2,p) with their tensor/wedge decompositions.

mod census;
mod cyclic;
mod esq;
mod perm;
mod poly;
mod sympower;

pub use census::{dim4_census, CensusClass, CensusReport};
pub use cyclic::{cyclic_family, CyclicFamily};
pub use esq::{esq_structures, EsqStructure};
pub use perm::{agl_generators, deleted_perm_module, perm_matrix};
pub use poly::{
    cg_tensor_decompose, cg_wedge_sym_decompose, gl2_generators, sl2_generators, vm_matrix,
    vm_module, CgTensorReport, CgWedgeSymReport,
};
pub use sympower::{sym_power_algebra, SymPowerAlgebra};

use thiserror::Error;

use crate::algebra::{AcAlgebra, AlgebraError};
use crate::field::{Field, FieldError};
use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("the module is reducible, so no exterior-self-quotient structure is defined")]
    ReducibleModule,
    #[error("characteristic {p} divides the point count {t}")]
    CharacteristicDividesT { p: u64, t: usize },
    #[error("unsupported point count {0} (need a prime power <= 32)")]
    UnsupportedT(usize),
    #[error("point maps of length {got} are not permutations of {expected} points")]
    BadPermutation { got: usize, expected: usize },
    #[error("unsupported census size q = {0} (need an odd prime power <= 13, not divisible by 5)")]
    UnsupportedQ(u64),
    #[error("hypothesis violated: {0}")]
    BadHypothesis(String),
    #[error("degree {m} needs 2m < characteristic {p}")]
    CharTooSmall { m: usize, p: u64 },
    #[error("degree {m} needs m < characteristic {p}")]
    DegreeTooLargeForChar { m: usize, p: u64 },
    #[error("degree {0} is not congruent to 2 mod 4, so the hom space is empty")]
    BadCongruence(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The split 3-dimensional simple Lie algebra; re-exported here so the
/// named constructions live in one place.
pub use crate::algebra::sl2;

/// The 4-dimensional simple algebra whose automorphism group is
/// AGL(1,5): the exterior-self-quotient product of the deleted
/// permutation module of AGL(1,5) on 5 points, written in the basis
/// `u_i = x_i - x_4` with the canonical (first-entry-normalized)
/// intertwiner.  The integer table below reduces to that algebra over
/// every field of characteristic other than 2 and 5; its automorphism
/// group has order 20 with elements of orders 1, 2, 4 and 5.
///
/// ```text
/// <e_0,e_1> =         e_1 + 2e_2 - 2e_3
/// <e_0,e_2> =  -e_0 + 2e_1        - 2e_3
/// <e_0,e_3> =   e_0 + 2e_1 - 2e_2 -  e_3
/// <e_1,e_2> = -2e_0 +  e_1 -  e_2 + 2e_3
/// <e_1,e_3> =  2e_0        - 2e_2 +  e_3
/// <e_2,e_3> =  2e_0 - 2e_1 -  e_2
/// ```
pub fn agl_dim4_algebra(field: &Field) -> AcAlgebra {
    AcAlgebra::from_int_table(
        field,
        4,
        &[
            (0, 1, &[0, 1, 2, -2]),
            (0, 2, &[-1, 2, 0, -2]),
            (0, 3, &[1, 2, -2, -1]),
            (1, 2, &[-2, 1, -1, 2]),
            (1, 3, &[2, 0, -2, 1]),
            (2, 3, &[2, -2, -1, 0]),
        ],
    )
    .expect("valid table")
}
