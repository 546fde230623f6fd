//! The r-dimensional family built from a cyclic shift `A` and a
//! diagonal matrix `B` of root-of-unity powers.
//!
//! Parameters: an integer `b >= 2`, a divisor `n > 1` of `b^2 + b - 1`,
//! `r` the multiplicative order of `b` mod `n` (required `> 1`), and a
//! prime power `q` with `n | q - 1`.  The group `<A, B>` acts
//! irreducibly on `F_q^r`, its exterior square splits into invariant
//! pieces `U_1 + U_2` with `U_1` spanned by the adjacent wedges
//! `e_i ^ e_{i+1}`, and `e_i -> e_{i+1} ^ e_{i+2}` intertwines the two
//! actions.  The induced algebra has the wrap-around products
//! `<e_{i-1}, e_i> = e_{i-2}` and is simple.

use super::ConstructError;
use crate::algebra::AcAlgebra;
use crate::field::Field;
use crate::linalg::{pair_index, Matrix, ModuleRep, SolveOutcome, Subspace};

#[derive(Clone, Debug)]
pub struct CyclicFamily {
    pub b: u64,
    pub n: u64,
    pub r: usize,
    pub field: Field,
    /// The cyclic shift `e_i -> e_{i+1 mod r}`.
    pub shift: Matrix,
    /// `diag(zeta, zeta^b, ..., zeta^{b^{r-1}})`.
    pub diag: Matrix,
    pub u1: Subspace,
    pub u2: Subspace,
    /// Intertwiner `V -> wedge^2 V` with image `U_1`;
    /// row `i` is `e_{i+1} ^ e_{i+2}` (indices mod r).
    pub psi: Matrix,
    pub algebra: AcAlgebra,
}

/// Verification flags; see [`CyclicFamily::verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicFamilyChecks {
    pub relations_hold: bool,
    pub module_irreducible: bool,
    pub wedge_splits: bool,
    pub psi_intertwines: bool,
    pub psi_matches_table: bool,
    pub algebra_simple: bool,
    pub generators_are_automorphisms: bool,
}

impl CyclicFamilyChecks {
    pub fn all(&self) -> bool {
        self.relations_hold
            && self.module_irreducible
            && self.wedge_splits
            && self.psi_intertwines
            && self.psi_matches_table
            && self.algebra_simple
            && self.generators_are_automorphisms
    }
}

fn mult_order_mod(b: u64, n: u64) -> Option<u64> {
    let mut acc = b % n;
    for r in 1..=n {
        if acc == 1 {
            return Some(r);
        }
        acc = acc * b % n;
    }
    None
}

fn factor_prime_power(q: u64) -> Option<(u64, usize)> {
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut k = 0;
            let mut n = q;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            return if n == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

pub fn cyclic_family(b: u64, n: u64, q: u64) -> Result<CyclicFamily, ConstructError> {
    if b < 2 {
        return Err(ConstructError::BadHypothesis(format!("b = {b} must be at least 2")));
    }
    if n <= 1 || (b * b + b - 1) % n != 0 {
        return Err(ConstructError::BadHypothesis(format!(
            "n = {n} must be a divisor > 1 of b^2 + b - 1 = {}",
            b * b + b - 1
        )));
    }
    let r = mult_order_mod(b, n)
        .ok_or_else(|| ConstructError::BadHypothesis(format!("b = {b} is not invertible mod {n}")))?;
    if r <= 1 {
        return Err(ConstructError::BadHypothesis(format!(
            "the order of b mod n is {r}, need > 1"
        )));
    }
    let r = r as usize;
    let (p, k) = factor_prime_power(q)
        .ok_or_else(|| ConstructError::BadHypothesis(format!("q = {q} is not a prime power")))?;
    if (q - 1) % n != 0 {
        return Err(ConstructError::BadHypothesis(format!("n = {n} must divide q - 1 = {}", q - 1)));
    }
    let field = Field::new(p, k, None)?;
    let zeta = field.element_of_order(n)?;

    let mut shift = Matrix::zeros(&field, r, r);
    for i in 0..r {
        shift.set(i, (i + 1) % r, 1);
    }
    let mut diag = Matrix::zeros(&field, r, r);
    let mut power = 1u64; // b^i mod n
    for i in 0..r {
        diag.set(i, i, field.pow_rep(zeta.rep(), power as i64)?);
        power = power * b % n;
    }

    let dd = r * (r - 1) / 2;
    // U_1: wedges e_i ^ e_j with j - i = +/-1 mod r.
    let adjacent = |i: usize, j: usize| (j + r - i) % r == 1 || (i + r - j) % r == 1;
    let mut u1_rows = Vec::new();
    let mut u2_rows = Vec::new();
    for i in 0..r {
        for j in (i + 1)..r {
            let mut v = vec![0u64; dd];
            v[pair_index(i, j, r)] = 1;
            if adjacent(i, j) {
                u1_rows.push(v);
            } else {
                u2_rows.push(v);
            }
        }
    }
    let u1 = Subspace::from_rows(&field, dd, u1_rows);
    let u2 = Subspace::from_rows(&field, dd, u2_rows);

    // psi: e_i -> e_{i+1} ^ e_{i+2}, stored in the ordered wedge basis
    // with a sign when the cyclic pair wraps.
    let mut psi = Matrix::zeros(&field, r, dd);
    for i in 0..r {
        let a = (i + 1) % r;
        let c = (i + 2) % r;
        if a < c {
            psi.set(i, pair_index(a, c, r), 1);
        } else {
            psi.set(i, pair_index(c, a, r), field.neg_rep(1));
        }
    }

    // Wrap-around multiplication table.
    let mut table = vec![vec![0u64; r]; dd];
    table[pair_index(0, 1, r)][r - 1] = 1;
    for i in 2..r {
        table[pair_index(i - 1, i, r)][i - 2] = 1;
    }
    // <e_{r-1}, e_0> = e_{r-2}, stored as <e_0, e_{r-1}> = -e_{r-2}.
    table[pair_index(0, r - 1, r)][r - 2] = field.neg_rep(1);
    let algebra = AcAlgebra::from_rep_table(&field, r, table);

    Ok(CyclicFamily { b, n, r, field, shift, diag, u1, u2, psi, algebra })
}

impl CyclicFamily {
    pub fn module(&self) -> ModuleRep {
        ModuleRep::new(&self.field, self.r, vec![self.shift.clone(), self.diag.clone()])
            .expect("shift and diag are invertible")
    }

    /// Runs every check of the construction and reports the outcomes.
    pub fn verify(&self) -> Result<CyclicFamilyChecks, ConstructError> {
        let f = &self.field;
        let r = self.r;
        let id = Matrix::identity(f, r);

        let b_inv = mult_order_mod(self.b % self.n, self.n)
            .map(|ord| {
                // b^{ord-1} is the inverse of b mod n.
                let mut acc = 1u64;
                for _ in 0..ord - 1 {
                    acc = acc * self.b % self.n;
                }
                acc
            })
            .expect("b is invertible mod n");
        let relations_hold = self.shift.pow(r as u64) == id
            && self.diag.pow(self.n) == id
            && self.diag.mul(&self.shift) == self.shift.mul(&self.diag.pow(b_inv));

        let module = self.module();
        let module_irreducible = module.is_irreducible()?;

        let wedge_a = self.shift.wedge_square()?;
        let wedge_b = self.diag.wedge_square()?;
        let dd = r * (r - 1) / 2;
        let wedge_splits = self.u1.dim() + self.u2.dim() == dd
            && self.u1.intersect(&self.u2).is_zero()
            && self.u1.contains_subspace(&self.u1.apply(&wedge_a))
            && self.u1.contains_subspace(&self.u1.apply(&wedge_b))
            && self.u2.contains_subspace(&self.u2.apply(&wedge_a))
            && self.u2.contains_subspace(&self.u2.apply(&wedge_b));

        let psi_intertwines = self.shift.mul(&self.psi) == self.psi.mul(&wedge_a)
            && self.diag.mul(&self.psi) == self.psi.mul(&wedge_b);

        let psi_matches_table = self.esq_table_from_psi()? == *self.algebra.table();

        let algebra_simple = self.algebra.is_simple()?;
        let generators_are_automorphisms = self.algebra.is_automorphism_matrix(&self.shift)
            && self.algebra.is_automorphism_matrix(&self.diag);

        Ok(CyclicFamilyChecks {
            relations_hold,
            module_irreducible,
            wedge_splits,
            psi_intertwines,
            psi_matches_table,
            algebra_simple,
            generators_are_automorphisms,
        })
    }

    /// The table of the quotient product: project `e_i ^ e_j` onto
    /// `U_1` along `U_2` (both are coordinate subspaces) and pull back
    /// through `psi`.
    fn esq_table_from_psi(&self) -> Result<Vec<Vec<u64>>, ConstructError> {
        let f = &self.field;
        let r = self.r;
        let dd = r * (r - 1) / 2;
        let adjacent = |i: usize, j: usize| (j + r - i) % r == 1 || (i + r - j) % r == 1;
        let psi_t = self.psi.transpose();
        let mut table = Vec::with_capacity(dd);
        for i in 0..r {
            for j in (i + 1)..r {
                let mut w = vec![0u64; dd];
                if adjacent(i, j) {
                    w[pair_index(i, j, r)] = 1;
                }
                let rhs = Matrix::from_reps(f, dd, 1, w);
                let report = psi_t.rref_solve(Some(&rhs))?;
                match report.outcome {
                    SolveOutcome::Solution(y) => {
                        table.push((0..r).map(|t| y.get(t, 0)).collect());
                    }
                    _ => unreachable!("psi is injective with image U_1"),
                }
            }
        }
        Ok(table)
    }
}
