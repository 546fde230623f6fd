//! The (m+1)-dimensional algebras carried by the degree-m polynomial
//! module of SL(2,p), defined whenever `m = 2 mod 4` and `2m < p`: the
//! intertwiner space from the exterior square back onto the module is
//! then one-dimensional, and its (normalized) generator defines a
//! simple algebra on which SL(2,p) acts by automorphisms.  For m = 2
//! the result is the 3-dimensional simple Lie algebra; for m = 6 it is
//! the 7-dimensional non-Lie simple Malcev algebra.

use super::poly::{sl2_generators, vm_module};
use super::ConstructError;
use crate::algebra::AcAlgebra;
use crate::field::Field;
use crate::linalg::{hom_module_space, Matrix, ModuleRep};

#[derive(Clone, Debug)]
pub struct SymPowerAlgebra {
    pub m: usize,
    pub field: Field,
    /// `V_m` with the two standard SL(2,p) generators.
    pub module: ModuleRep,
    /// Dimension of the intertwiner space `wedge^2 V_m -> V_m`;
    /// expected to be exactly 1 and reported rather than assumed.
    pub hom_dim: usize,
    /// The canonical intertwiner (first basis element, scaled so its
    /// first nonzero entry is 1).
    pub psi: Matrix,
    pub algebra: AcAlgebra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymPowerChecks {
    pub hom_dim_is_one: bool,
    pub generators_are_automorphisms: bool,
    pub product_spans: bool,
    pub simple: bool,
}

impl SymPowerChecks {
    pub fn all(&self) -> bool {
        self.hom_dim_is_one && self.generators_are_automorphisms && self.product_spans && self.simple
    }
}

pub fn sym_power_algebra(m: usize, field: &Field) -> Result<SymPowerAlgebra, ConstructError> {
    let p = field.characteristic();
    if (2 * m) as u64 >= p {
        return Err(ConstructError::CharTooSmall { m, p });
    }
    if m % 4 != 2 {
        return Err(ConstructError::BadCongruence(m));
    }
    let gens = sl2_generators(field);
    let module = vm_module(m, field, &gens)?;
    let wedge = module.wedge_square()?;
    let basis = hom_module_space(wedge.gens(), module.gens())?;
    let hom_dim = basis.len();
    assert!(hom_dim >= 1, "the congruence m = 2 mod 4 guarantees an intertwiner");
    let raw = &basis[0];
    let first_nonzero = raw
        .data()
        .iter()
        .copied()
        .find(|&c| c != 0)
        .expect("intertwiner basis elements are nonzero");
    let psi = raw.scale(field.inv_rep(first_nonzero).expect("nonzero"));

    let dim = m + 1;
    let table = (0..dim * (dim - 1) / 2).map(|r| psi.row(r).to_vec()).collect();
    let algebra = AcAlgebra::from_rep_table(field, dim, table);
    Ok(SymPowerAlgebra { m, field: field.clone(), module, hom_dim, psi, algebra })
}

impl SymPowerAlgebra {
    pub fn verify(&self) -> Result<SymPowerChecks, ConstructError> {
        let generators_are_automorphisms = self
            .module
            .gens()
            .iter()
            .all(|g| self.algebra.is_automorphism_matrix(g));
        let product_spans = self.algebra.product_span().is_full();
        let simple = self.algebra.is_simple()?;
        Ok(SymPowerChecks {
            hom_dim_is_one: self.hom_dim == 1,
            generators_are_automorphisms,
            product_spans,
            simple,
        })
    }
}
