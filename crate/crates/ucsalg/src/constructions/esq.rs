//! Exterior-self-quotient structures: surjective intertwiners from the
//! exterior square of an irreducible module back onto the module, each
//! of which defines an anti-commutative algebra `<u, v> = (u ^ v) psi`
//! on which the acting group is a group of automorphisms.

use super::ConstructError;
use crate::algebra::AcAlgebra;
use crate::linalg::{hom_module_space, Matrix, ModuleRep};

/// A surjective intertwiner `psi : wedge^2 V -> V` together with the
/// algebra it defines.
#[derive(Clone, Debug)]
pub struct EsqStructure {
    pub psi: Matrix,
    pub algebra: AcAlgebra,
}

impl EsqStructure {
    /// The algebra of a given intertwiner: row `pair_index(i, j)` of
    /// `psi` is the coordinate vector of `<e_i, e_j>`.
    pub fn from_psi(field: &crate::field::Field, dim: usize, psi: &Matrix) -> EsqStructure {
        let table = (0..dim * (dim - 1) / 2).map(|r| psi.row(r).to_vec()).collect();
        EsqStructure {
            psi: psi.clone(),
            algebra: AcAlgebra::from_rep_table(field, dim, table),
        }
    }
}

/// All surjective intertwiners `wedge^2 V -> V` for an irreducible
/// module, enumerated over the full hom space in a fixed order, each
/// packaged with its algebra.  An empty result means no quotient of the
/// exterior square is isomorphic to `V` through this hom space.
pub fn esq_structures(rep: &ModuleRep) -> Result<Vec<EsqStructure>, ConstructError> {
    let d = rep.dim();
    assert!(d >= 2, "exterior squares need dimension at least 2");
    if !rep.is_irreducible()? {
        return Err(ConstructError::ReducibleModule);
    }
    let field = rep.field().clone();
    let wedge = rep.wedge_square()?;
    let basis = hom_module_space(wedge.gens(), rep.gens())?;
    let q = field.order();
    let total = (q as u128).pow(basis.len() as u32) as u64;
    let mut out = Vec::new();
    for idx in 1..total {
        let mut psi = Matrix::zeros(&field, d * (d - 1) / 2, d);
        let mut t = idx;
        for b in &basis {
            let c = t % q;
            t /= q;
            if c != 0 {
                psi = psi.add(&b.scale(c));
            }
        }
        if psi.rank() == d {
            out.push(EsqStructure::from_psi(&field, d, &psi));
        }
    }
    Ok(out)
}

/// The dimension of the intertwiner space `wedge^2 V -> V`.
pub fn esq_hom_dim(rep: &ModuleRep) -> Result<usize, ConstructError> {
    let wedge = rep.wedge_square()?;
    Ok(hom_module_space(wedge.gens(), rep.gens())?.len())
}
