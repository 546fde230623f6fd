//! Computational toolkit for the correspondence between finite p-groups
//! of exponent p^2 with exactly three characteristic subgroups and
//! anti-commutative algebras over finite fields whose automorphism
//! group acts irreducibly.
//!
//! The crate is organized bottom-up:
//!
//! * [`field`]: exact arithmetic in `F_p` and small `F_{p^k}`;
//! * [`linalg`]: dense matrices, canonical subspaces, exterior
//!   squares, spinning and intertwiner spaces;
//! * [`algebra`]: anti-commutative structure-constant algebras with
//!   ideals, decomposition, identity checks and isomorphism search;
//! * [`group`]: the corresponding p-groups via exponent-vector normal
//!   forms and class-2 collection;
//! * [`duality`]: the two directions of the group/algebra bijection,
//!   automorphism lifting, and correspondence audits;
//! * [`constructions`]: the explicit families (deleted permutation
//!   modules, the 4-dimensional census, the cyclic-shift family,
//!   symmetric-power modules of SL(2,p) and their Clebsch-Gordan
//!   decompositions);
//! * [`json`]: stable serialization formats used by the CLI.
//!
//! The deterministic [`rng`] keeps the sampling audits reproducible.
//!
//! A walkthrough with runnable examples lives in the `book/` directory
//! of the repository.

pub mod algebra;
pub mod constructions;
pub mod duality;
pub mod field;
pub mod group;
pub mod json;
pub mod linalg;
pub mod par;
pub mod rng;

pub use algebra::AcAlgebra;
pub use field::{Field, FieldElem};
pub use group::{GroupElem, PcGroup};
pub use linalg::{Matrix, ModuleRep, Subspace};
