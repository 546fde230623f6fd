//! Matrix representations of groups: spinning, irreducibility by
//! exhaustive projective enumeration, and intertwiner spaces.

use super::projective_count;
use super::{LinalgError, Matrix, Subspace, PROJECTIVE_BUDGET};
use crate::field::Field;
use crate::par;

/// A list of invertible generator actions on `F^d`.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    field: Field,
    dim: usize,
    gens: Vec<Matrix>,
    labels: Option<Vec<String>>,
}

impl ModuleRep {
    pub fn new(field: &Field, dim: usize, gens: Vec<Matrix>) -> Result<ModuleRep, LinalgError> {
        for g in &gens {
            if g.rows() != dim || g.cols() != dim {
                return Err(LinalgError::DimensionMismatch(format!(
                    "generator is {}x{}, expected {dim}x{dim}",
                    g.rows(),
                    g.cols()
                )));
            }
            if g.field() != field {
                return Err(LinalgError::FieldMismatch);
            }
            if !g.is_invertible() {
                return Err(LinalgError::NotInvertible);
            }
        }
        Ok(ModuleRep { field: field.clone(), dim, gens, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> ModuleRep {
        assert_eq!(labels.len(), self.gens.len());
        self.labels = Some(labels);
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Componentwise exterior square of the generator list.
    pub fn wedge_square(&self) -> Result<ModuleRep, LinalgError> {
        let gens = self
            .gens
            .iter()
            .map(Matrix::wedge_square)
            .collect::<Result<Vec<_>, _>>()?;
        ModuleRep::new(&self.field, self.dim * (self.dim - 1) / 2, gens)
    }

    pub fn spin(&self, seeds: &[Vec<u64>]) -> Result<Subspace, LinalgError> {
        for s in seeds {
            if s.len() != self.dim {
                return Err(LinalgError::DimensionMismatch(format!(
                    "seed length {} vs module dimension {}",
                    s.len(),
                    self.dim
                )));
            }
        }
        Ok(spin_matrices(&self.field, self.dim, seeds, &self.gens))
    }

    /// Decides irreducibility by spinning every projective point: a
    /// proper nonzero invariant subspace exists iff some spin is proper.
    pub fn is_irreducible(&self) -> Result<bool, LinalgError> {
        self.is_irreducible_with_budget(PROJECTIVE_BUDGET)
    }

    pub fn is_irreducible_with_budget(&self, budget: u128) -> Result<bool, LinalgError> {
        let points = projective_count(self.field.order(), self.dim);
        if points > budget {
            return Err(LinalgError::TooLargeForExhaustive { points, budget });
        }
        let field = self.field.clone();
        let dim = self.dim;
        let gens = self.gens.clone();
        Ok(par::all_indices(points as u64, |idx| {
            let seed = super::projective_rep_at(&field, dim, idx);
            spin_matrices(&field, dim, std::slice::from_ref(&seed), &gens).dim() == dim
        }))
    }
}

/// Smallest subspace containing `seeds` that is invariant under every
/// matrix in `mats` (closure by repeated image-taking).  The matrices
/// need not be invertible.
pub fn spin_matrices(field: &Field, dim: usize, seeds: &[Vec<u64>], mats: &[Matrix]) -> Subspace {
    // Incremental elimination: `rows` is kept in row echelon form (not
    // reduced), `pivot_cols[i]` is the pivot of row i.
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(dim);
    let mut pivot_cols: Vec<usize> = Vec::with_capacity(dim);
    let mut queue: Vec<Vec<u64>> = Vec::new();

    let insert = |v: &[u64], rows: &mut Vec<Vec<u64>>, pivot_cols: &mut Vec<usize>| -> Option<Vec<u64>> {
        let mut v = v.to_vec();
        for (row, &pc) in rows.iter().zip(pivot_cols.iter()) {
            if v[pc] != 0 {
                let c = v[pc];
                for j in 0..dim {
                    v[j] = field.sub_rep(v[j], field.mul_rep(c, row[j]));
                }
            }
        }
        let pc = v.iter().position(|&c| c != 0)?;
        let inv = field.inv_rep(v[pc]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = field.mul_rep(*x, inv);
        }
        rows.push(v.clone());
        pivot_cols.push(pc);
        Some(v)
    };

    for s in seeds {
        if let Some(v) = insert(s, &mut rows, &mut pivot_cols) {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        if rows.len() == dim {
            break;
        }
        for m in mats {
            let img = m.apply_row(&v);
            if let Some(w) = insert(&img, &mut rows, &mut pivot_cols) {
                queue.push(w);
            }
            if rows.len() == dim {
                break;
            }
        }
    }
    if rows.len() == dim {
        return Subspace::full(field, dim);
    }
    Subspace::from_rows(field, dim, rows)
}

/// Canonical basis of the space of intertwiners `psi : V -> W`, i.e.
/// matrices with `gV * psi = psi * gW` for every aligned generator
/// pair.  Generators are aligned by list index.
pub fn hom_module_space(gens_v: &[Matrix], gens_w: &[Matrix]) -> Result<Vec<Matrix>, LinalgError> {
    if gens_v.len() != gens_w.len() {
        return Err(LinalgError::GeneratorCountMismatch {
            left: gens_v.len(),
            right: gens_w.len(),
        });
    }
    assert!(!gens_v.is_empty(), "at least one generator pair is required");
    let field = gens_v[0].field().clone();
    let dv = gens_v[0].rows();
    let dw = gens_w[0].rows();
    for g in gens_v {
        if g.rows() != dv || g.cols() != dv {
            return Err(LinalgError::DimensionMismatch("ragged V generators".into()));
        }
        if g.field() != &field {
            return Err(LinalgError::FieldMismatch);
        }
    }
    for g in gens_w {
        if g.rows() != dw || g.cols() != dw {
            return Err(LinalgError::DimensionMismatch("ragged W generators".into()));
        }
        if g.field() != &field {
            return Err(LinalgError::FieldMismatch);
        }
    }

    // Unknowns: psi[a][b] vectorized row-major as u[a*dw + b].
    // For each generator pair and each (a, b):
    //   sum_c gV[a][c] psi[c][b] - sum_d psi[a][d] gW[d][b] = 0.
    let unknowns = dv * dw;
    let mut eqs = Matrix::zeros(&field, gens_v.len() * unknowns, unknowns);
    let mut row = 0;
    for (gv, gw) in gens_v.iter().zip(gens_w) {
        for a in 0..dv {
            for b in 0..dw {
                for c in 0..dv {
                    let cur = eqs.get(row, c * dw + b);
                    eqs.set(row, c * dw + b, field.add_rep(cur, gv.get(a, c)));
                }
                for d in 0..dw {
                    let cur = eqs.get(row, a * dw + d);
                    eqs.set(row, a * dw + d, field.sub_rep(cur, gw.get(d, b)));
                }
                row += 1;
            }
        }
    }
    let kernel = eqs.rref_solve(None)?.kernel;
    let out = (0..kernel.dim())
        .map(|i| {
            let v = kernel.basis().row(i).to_vec();
            Matrix::from_reps(&field, dv, dw, v)
        })
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    fn cycle5_deleted_module(field: &Field) -> ModuleRep {
        // Deleted permutation module of the 5-cycle on points
        // {0,..,4}, basis u_i = x_i - x_4: u_i -> u_{i+1} - u_0 for
        // i < 3, u_3 -> -u_0.
        let m = Matrix::from_ints(
            field,
            &[&[-1, 1, 0, 0], &[-1, 0, 1, 0], &[-1, 0, 0, 1], &[-1, 0, 0, 0]],
        );
        ModuleRep::new(field, 4, vec![m]).unwrap()
    }

    #[test]
    fn spin_identity_fixes_seed() {
        let f = f5();
        let rep = ModuleRep::new(&f, 3, vec![Matrix::identity(&f, 3)]).unwrap();
        let s = rep.spin(&[vec![1, 0, 0]]).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&[1, 0, 0]));
    }

    #[test]
    fn spin_under_cyclic_shift_is_full() {
        let f = Field::prime(11).unwrap();
        let shift = Matrix::from_ints(
            &f,
            &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0]],
        );
        let rep = ModuleRep::new(&f, 4, vec![shift]).unwrap();
        assert!(rep.spin(&[vec![1, 0, 0, 0]]).unwrap().is_full());
    }

    #[test]
    fn identity_module_is_reducible() {
        let f = f5();
        let rep = ModuleRep::new(&f, 2, vec![Matrix::identity(&f, 2)]).unwrap();
        assert!(!rep.is_irreducible().unwrap());
    }

    #[test]
    fn deleted_cycle_module_over_f5_has_invariant_line() {
        // Over F_5 the all-ones vector of the natural module falls into
        // the deleted submodule: sum u_i = sum_{i<4} x_i + x_4 mod 5,
        // so span{(1,1,1,1)} is invariant and the module is reducible.
        let f = f5();
        let rep = cycle5_deleted_module(&f);
        let line = rep.spin(&[vec![1, 1, 1, 1]]).unwrap();
        assert_eq!(line.dim(), 1);
        assert!(!rep.is_irreducible().unwrap());
    }

    #[test]
    fn deleted_cycle_module_over_f3_is_irreducible() {
        let f = Field::prime(3).unwrap();
        let rep = cycle5_deleted_module(&f);
        assert!(rep.is_irreducible().unwrap());
    }

    #[test]
    fn endomorphisms_of_cycle_module_over_f3() {
        // The 5-cycle acts irreducibly on the 4-dimensional module over
        // F_3 with endomorphism field F_81, so the space of
        // self-intertwiners has dimension 4.
        let f = Field::prime(3).unwrap();
        let rep = cycle5_deleted_module(&f);
        let homs = hom_module_space(rep.gens(), rep.gens()).unwrap();
        assert_eq!(homs.len(), 4);
        for psi in &homs {
            for g in rep.gens() {
                assert_eq!(g.mul(psi), psi.mul(g));
            }
        }
    }

    #[test]
    fn identity_module_endomorphisms_are_all_matrices() {
        let f = f5();
        let id = vec![Matrix::identity(&f, 2)];
        let homs = hom_module_space(&id, &id).unwrap();
        assert_eq!(homs.len(), 4);
    }

    #[test]
    fn spin_minimality_invariants() {
        let f = Field::prime(3).unwrap();
        let rep = cycle5_deleted_module(&f);
        let seeds = vec![vec![1, 0, 2, 0]];
        let s = rep.spin(&seeds).unwrap();
        for seed in &seeds {
            assert!(s.contains(seed));
        }
        for g in rep.gens() {
            assert!(s.contains_subspace(&s.apply(g)));
        }
        // Re-spinning each basis vector stays inside.
        for row in s.basis_rows() {
            assert!(s.contains_subspace(&rep.spin(&[row]).unwrap()));
        }
    }
}
