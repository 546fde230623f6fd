//! Anti-commutative algebras given by structure constants.
//!
//! An algebra of dimension `r` over `F` stores, for each basis pair
//! `(i, j)` with `i < j`, the coordinate vector of `<e_i, e_j>`.
//! Products for `i >= j` are never stored: `<e_i, e_i> = 0` and
//! `<e_j, e_i> = -<e_i, e_j>` are structural.

mod iso;

pub use iso::{IsoSearch, SEARCH_SPACE_BOUND};

use std::fmt;

use thiserror::Error;

use crate::field::{Field, FieldElem};
use crate::linalg::{pair_index, projective_count, projective_reps, LinalgError, Matrix, Subspace};

use crate::par;

/// Default cap on projective points for the exhaustive ideal scans
/// (simplicity, minimal ideals).
pub const IDEAL_SCAN_BUDGET: u128 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("table pair ({i}, {j}) is not strictly ordered")]
    PairNotStrictlyOrdered { i: usize, j: usize },
    #[error("duplicate table pair ({i}, {j})")]
    DuplicatePair { i: usize, j: usize },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{points} projective points exceed the exhaustive budget {budget}")]
    TooLargeForExhaustive { points: u128, budget: u128 },
    #[error("the algebra has a nonzero center, so it is not irreducible-automorphism")]
    HasCenter,
    #[error("the algebra is 3-dimensional only operations: got dimension {0}")]
    NotDim3(usize),
    #[error("the products <e_{{i+1}}, e_{{i+2}}> do not span the algebra")]
    ProductNotFull,
    #[error("no generating subset of size <= 3 was found")]
    NoSmallGeneratingSet,
    #[error("search space of {space} image tuples exceeds the bound {bound}")]
    SearchSpaceTooLarge { space: u128, bound: u128 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// An anti-commutative structure-constant algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct AcAlgebra {
    field: Field,
    dim: usize,
    /// `table[pair_index(i, j, dim)]` = coordinates of `<e_i, e_j>`.
    table: Vec<Vec<u64>>,
}

impl fmt::Debug for AcAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "AcAlgebra(dim {} over {})", self.dim, self.field)?;
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let c = self.pair(i, j);
                if c.iter().any(|&x| x != 0) {
                    writeln!(f, "  <e_{i}, e_{j}> = {c:?}")?;
                }
            }
        }
        Ok(())
    }
}

impl AcAlgebra {
    /// Builds an algebra from sparse table entries; omitted pairs have
    /// zero product.
    pub fn new(
        field: &Field,
        dim: usize,
        entries: &[(usize, usize, Vec<FieldElem>)],
    ) -> Result<AcAlgebra, AlgebraError> {
        assert!(dim >= 1, "dimension must be at least 1");
        let pairs = dim * (dim - 1) / 2;
        let mut table = vec![vec![0u64; dim]; pairs];
        let mut seen = vec![false; pairs];
        for (i, j, c) in entries {
            let (i, j) = (*i, *j);
            if i >= j {
                return Err(AlgebraError::PairNotStrictlyOrdered { i, j });
            }
            if j >= dim {
                return Err(AlgebraError::IndexOutOfRange { index: j, dim });
            }
            if c.len() != dim {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "product vector has length {}, expected {dim}",
                    c.len()
                )));
            }
            let idx = pair_index(i, j, dim);
            if seen[idx] {
                return Err(AlgebraError::DuplicatePair { i, j });
            }
            seen[idx] = true;
            for (k, e) in c.iter().enumerate() {
                if e.field() != field {
                    return Err(AlgebraError::FieldMismatch);
                }
                table[idx][k] = e.rep();
            }
        }
        Ok(AcAlgebra { field: field.clone(), dim, table })
    }

    /// Builds from raw representative vectors (internal constructor).
    pub fn from_rep_table(field: &Field, dim: usize, table: Vec<Vec<u64>>) -> AcAlgebra {
        assert_eq!(table.len(), dim * (dim - 1) / 2);
        for c in &table {
            assert_eq!(c.len(), dim);
            debug_assert!(c.iter().all(|&x| x < field.order()));
        }
        AcAlgebra { field: field.clone(), dim, table }
    }

    /// Convenience constructor for literal signed-integer tables.
    pub fn from_int_table(
        field: &Field,
        dim: usize,
        entries: &[(usize, usize, &[i64])],
    ) -> Result<AcAlgebra, AlgebraError> {
        let converted: Vec<(usize, usize, Vec<FieldElem>)> = entries
            .iter()
            .map(|&(i, j, c)| (i, j, c.iter().map(|&n| field.elem_from_int(n)).collect()))
            .collect();
        AcAlgebra::new(field, dim, &converted)
    }

    pub fn zero_algebra(field: &Field, dim: usize) -> AcAlgebra {
        AcAlgebra::from_rep_table(field, dim, vec![vec![0; dim]; dim * (dim - 1) / 2])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of `<e_i, e_j>` for `i < j`.
    pub fn pair(&self, i: usize, j: usize) -> &[u64] {
        &self.table[pair_index(i, j, self.dim)]
    }

    pub fn table(&self) -> &[Vec<u64>] {
        &self.table
    }

    /// Bilinear product `<x, y> = sum_{i<j} (x_i y_j - x_j y_i) c^(i,j)`.
    pub fn product(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let f = &self.field;
        let mut out = vec![0u64; self.dim];
        if f.is_prime_field() {
            let p = f.characteristic();
            for i in 0..self.dim {
                if x[i] == 0 && y[i] == 0 {
                    continue;
                }
                for j in (i + 1)..self.dim {
                    let coeff = (x[i] * y[j] + p * p - x[j] * y[i]) % p;
                    if coeff == 0 {
                        continue;
                    }
                    let c = &self.table[pair_index(i, j, self.dim)];
                    for k in 0..self.dim {
                        out[k] = (out[k] + coeff * c[k]) % p;
                    }
                }
            }
        } else {
            for i in 0..self.dim {
                for j in (i + 1)..self.dim {
                    let coeff =
                        f.sub_rep(f.mul_rep(x[i], y[j]), f.mul_rep(x[j], y[i]));
                    if coeff == 0 {
                        continue;
                    }
                    let c = &self.table[pair_index(i, j, self.dim)];
                    for k in 0..self.dim {
                        out[k] = f.add_rep(out[k], f.mul_rep(coeff, c[k]));
                    }
                }
            }
        }
        out
    }

    /// Checked product on element vectors.
    pub fn product_elems(
        &self,
        x: &[FieldElem],
        y: &[FieldElem],
    ) -> Result<Vec<FieldElem>, AlgebraError> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch(format!(
                "vectors of length {}/{} in dimension {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        for e in x.iter().chain(y) {
            if e.field() != &self.field {
                return Err(AlgebraError::FieldMismatch);
            }
        }
        let xr: Vec<u64> = x.iter().map(|e| e.rep()).collect();
        let yr: Vec<u64> = y.iter().map(|e| e.rep()).collect();
        Ok(self
            .product(&xr, &yr)
            .into_iter()
            .map(|r| self.field.elem_from_rep(r))
            .collect())
    }

    /// Matrix of `v -> <x, v>` (apply with `v * ad(x)`).
    pub fn ad(&self, x: &[u64]) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.dim, self.dim);
        for i in 0..self.dim {
            let mut e = vec![0u64; self.dim];
            e[i] = 1;
            let row = self.product(x, &e);
            for j in 0..self.dim {
                m.set(i, j, row[j]);
            }
        }
        m
    }

    /// Matrices of `v -> <v, e_k>` for all k; spinning seeds under these
    /// yields ideal closures.
    fn right_mult_matrices(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|k| {
                let mut m = Matrix::zeros(&self.field, self.dim, self.dim);
                for i in 0..self.dim {
                    let mut e = vec![0u64; self.dim];
                    e[i] = 1;
                    let mut ek = vec![0u64; self.dim];
                    ek[k] = 1;
                    let row = self.product(&e, &ek);
                    for j in 0..self.dim {
                        m.set(i, j, row[j]);
                    }
                }
                m
            })
            .collect()
    }

    /// Smallest ideal containing the seed vectors.
    pub fn ideal_closure(&self, seeds: &[Vec<u64>]) -> Result<Subspace, AlgebraError> {
        for s in seeds {
            if s.len() != self.dim {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "seed length {} in dimension {}",
                    s.len(),
                    self.dim
                )));
            }
        }
        let mats = self.right_mult_matrices();
        Ok(crate::linalg::spin_matrices(&self.field, self.dim, seeds, &mats))
    }

    /// Subalgebra and ideal predicates for a subspace.
    pub fn subspace_tests(&self, s: &Subspace) -> Result<SubspaceFlags, AlgebraError> {
        if s.ambient() != self.dim {
            return Err(AlgebraError::DimensionMismatch(format!(
                "subspace of F^{} in dimension {}",
                s.ambient(),
                self.dim
            )));
        }
        let basis = s.basis_rows();
        let mut is_subalgebra = true;
        'outer: for u in &basis {
            for v in &basis {
                if !s.contains(&self.product(u, v)) {
                    is_subalgebra = false;
                    break 'outer;
                }
            }
        }
        let mut is_ideal = true;
        'outer2: for u in &basis {
            for k in 0..self.dim {
                let mut e = vec![0u64; self.dim];
                e[k] = 1;
                if !s.contains(&self.product(u, &e)) {
                    is_ideal = false;
                    break 'outer2;
                }
            }
        }
        Ok(SubspaceFlags { is_subalgebra, is_ideal })
    }

    /// Center `{x : <x, y> = 0 for all y}` as the kernel of the stacked
    /// right-multiplication maps.
    pub fn center(&self) -> Subspace {
        let f = &self.field;
        let stacked_cols = self.dim * self.dim;
        let mut m = Matrix::zeros(f, self.dim, stacked_cols);
        for i in 0..self.dim {
            let mut e = vec![0u64; self.dim];
            e[i] = 1;
            for k in 0..self.dim {
                let mut ek = vec![0u64; self.dim];
                ek[k] = 1;
                let prod = self.product(&e, &ek);
                for j in 0..self.dim {
                    m.set(i, k * self.dim + j, prod[j]);
                }
            }
        }
        // x * m = 0  <=>  m^t x^t = 0.
        m.transpose().rref_solve(None).expect("no rhs").kernel
    }

    /// Span of all products `<e_i, e_j>`.
    pub fn product_span(&self) -> Subspace {
        Subspace::from_rows(&self.field, self.dim, self.table.clone())
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|c| c.iter().all(|&x| x == 0))
    }

    /// Identity flags: abelian, Jacobi, Malcev.
    ///
    /// The Jacobiator is multilinear and alternating, so basis triples
    /// suffice.  The Malcev identity `<J(x,y,z), x> = J(x, y, <x,z>)` is
    /// quadratic in `x`, so it is checked on all basis vectors plus the
    /// polarization set `x = e_a + e_d` (and `x = e_a + 2 e_d` over F_3).
    pub fn identity_checks(&self) -> IdentityFlags {
        let abelian = self.is_abelian();
        let r = self.dim;
        let basis: Vec<Vec<u64>> = (0..r)
            .map(|i| {
                let mut e = vec![0u64; r];
                e[i] = 1;
                e
            })
            .collect();

        let jacobiator = |x: &[u64], y: &[u64], z: &[u64]| -> Vec<u64> {
            let f = &self.field;
            let mut out = self.product(&self.product(x, y), z);
            for (o, v) in out.iter_mut().zip(self.product(&self.product(y, z), x)) {
                *o = f.add_rep(*o, v);
            }
            for (o, v) in out.iter_mut().zip(self.product(&self.product(z, x), y)) {
                *o = f.add_rep(*o, v);
            }
            out
        };

        let mut jacobi = true;
        'j: for a in 0..r {
            for b in (a + 1)..r {
                for c in (b + 1)..r {
                    if jacobiator(&basis[a], &basis[b], &basis[c]).iter().any(|&v| v != 0) {
                        jacobi = false;
                        break 'j;
                    }
                }
            }
        }

        let malcev_holds_at = |x: &[u64]| -> bool {
            let f = &self.field;
            for y in &basis {
                for z in &basis {
                    let lhs = self.product(&jacobiator(x, y, z), x);
                    let rhs = jacobiator(x, y, &self.product(x, z));
                    if lhs
                        .iter()
                        .zip(&rhs)
                        .any(|(&l, &rr)| f.sub_rep(l, rr) != 0)
                    {
                        return false;
                    }
                }
            }
            true
        };

        let mut polar_set: Vec<Vec<u64>> = basis.clone();
        for a in 0..r {
            for d in (a + 1)..r {
                let mut v = vec![0u64; r];
                v[a] = 1;
                v[d] = 1;
                polar_set.push(v);
                if self.field.order() == 3 {
                    let mut w = vec![0u64; r];
                    w[a] = 1;
                    w[d] = 2;
                    polar_set.push(w);
                }
            }
        }
        let malcev = polar_set.iter().all(|x| malcev_holds_at(x));

        IdentityFlags { abelian, jacobi, malcev }
    }

    /// True iff the algebra is nonzero, non-abelian, and the ideal
    /// closure of every projective point is the whole algebra.
    pub fn is_simple(&self) -> Result<bool, AlgebraError> {
        self.is_simple_with_budget(IDEAL_SCAN_BUDGET)
    }

    pub fn is_simple_with_budget(&self, budget: u128) -> Result<bool, AlgebraError> {
        if self.is_abelian() {
            return Ok(false);
        }
        let points = projective_count(self.field.order(), self.dim);
        if points > budget {
            return Err(AlgebraError::TooLargeForExhaustive { points, budget });
        }
        let mats = self.right_mult_matrices();
        let field = self.field.clone();
        let dim = self.dim;
        Ok(par::all_indices(points as u64, |idx| {
            let seed = crate::linalg::projective_rep_at(&field, dim, idx);
            crate::linalg::spin_matrices(&field, dim, std::slice::from_ref(&seed), &mats).dim()
                == dim
        }))
    }

    /// Like [`is_simple`](Self::is_simple), but counts the 1-dimensional
    /// abelian algebra as simple.
    pub fn is_simple_as_paper(&self) -> Result<bool, AlgebraError> {
        if self.dim == 1 {
            return Ok(true);
        }
        self.is_simple()
    }

    /// Block-diagonal direct sum; cross products are zero.
    pub fn direct_sum(&self, other: &AcAlgebra) -> Result<AcAlgebra, AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch);
        }
        let r1 = self.dim;
        let dim = r1 + other.dim;
        let pairs = dim * (dim - 1) / 2;
        let mut table = vec![vec![0u64; dim]; pairs];
        for i in 0..r1 {
            for j in (i + 1)..r1 {
                let src = self.pair(i, j);
                let dst = &mut table[pair_index(i, j, dim)];
                dst[..r1].copy_from_slice(src);
            }
        }
        for i in 0..other.dim {
            for j in (i + 1)..other.dim {
                let src = other.pair(i, j);
                let dst = &mut table[pair_index(r1 + i, r1 + j, dim)];
                dst[r1..].copy_from_slice(src);
            }
        }
        Ok(AcAlgebra::from_rep_table(&self.field, dim, table))
    }

    /// `k`-fold direct sum.
    pub fn direct_power(&self, k: usize) -> AcAlgebra {
        assert!(k >= 1);
        let mut out = self.clone();
        for _ in 1..k {
            out = out.direct_sum(self).expect("same field");
        }
        out
    }

    /// Closure of the span of `seeds` under products.
    pub fn generated_subalgebra(&self, seeds: &[Vec<u64>]) -> Result<Subspace, AlgebraError> {
        for s in seeds {
            if s.len() != self.dim {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "seed length {} in dimension {}",
                    s.len(),
                    self.dim
                )));
            }
        }
        let mut span = Subspace::from_rows(&self.field, self.dim, seeds.to_vec());
        loop {
            let basis = span.basis_rows();
            let mut grew = false;
            'outer: for u in &basis {
                for v in &basis {
                    let p = self.product(u, v);
                    if !span.contains(&p) {
                        let mut rows = span.basis_rows();
                        rows.push(p);
                        span = Subspace::from_rows(&self.field, self.dim, rows);
                        grew = true;
                        break 'outer;
                    }
                }
            }
            if !grew {
                return Ok(span);
            }
        }
    }

    /// Smallest generating tuple, scanning standard-basis subsets in
    /// size order first and falling back to pairs of arbitrary vectors
    /// (needed e.g. for direct sums, where no basis subset generates).
    pub fn generating_tuple(&self) -> Result<Vec<Vec<u64>>, AlgebraError> {
        let r = self.dim;
        let basis: Vec<Vec<u64>> = (0..r)
            .map(|i| {
                let mut e = vec![0u64; r];
                e[i] = 1;
                e
            })
            .collect();
        for size in 1..=3usize.min(r) {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                let tuple: Vec<Vec<u64>> = combo.iter().map(|&i| basis[i].clone()).collect();
                if self.generated_subalgebra(&tuple)?.is_full() {
                    return Ok(tuple);
                }
                let mut i = size;
                let done = loop {
                    if i == 0 {
                        break true;
                    }
                    i -= 1;
                    if combo[i] < r - (size - i) {
                        combo[i] += 1;
                        for j in (i + 1)..size {
                            combo[j] = combo[j - 1] + 1;
                        }
                        break false;
                    }
                };
                if done {
                    break;
                }
            }
        }
        // Fallback: pairs of projective representatives, first component
        // limited to an early window.  Deterministic.
        let reps: Vec<Vec<u64>> = projective_reps(&self.field, r).collect();
        for u in reps.iter().take(64) {
            for v in &reps {
                let tuple = vec![u.clone(), v.clone()];
                if self.generated_subalgebra(&tuple)?.is_full() {
                    return Ok(tuple);
                }
            }
        }
        Err(AlgebraError::NoSmallGeneratingSet)
    }

    /// The induced algebra on a subspace that is closed under products,
    /// in the coordinates of its canonical basis.
    pub fn restrict_to(&self, s: &Subspace) -> Result<AcAlgebra, AlgebraError> {
        let basis = s.basis_rows();
        let d = basis.len();
        let f = &self.field;
        // Solve coords * B = v for each product v.
        let bt = s.basis().transpose();
        let mut table = Vec::with_capacity(d * (d - 1) / 2);
        for i in 0..d {
            for j in (i + 1)..d {
                let prod = self.product(&basis[i], &basis[j]);
                let rhs = Matrix::from_reps(f, self.dim, 1, prod.clone());
                let report = bt.rref_solve(Some(&rhs))?;
                match report.outcome {
                    crate::linalg::SolveOutcome::Solution(x) => {
                        table.push((0..d).map(|k| x.get(k, 0)).collect());
                    }
                    _ => {
                        return Err(AlgebraError::DimensionMismatch(
                            "subspace is not closed under products".into(),
                        ))
                    }
                }
            }
        }
        Ok(AcAlgebra::from_rep_table(f, d, table))
    }

    /// Minimal ideals of a non-abelian algebra with zero center, found
    /// by exhaustive ideal closures over projective seeds.  Verifies the
    /// direct-sum properties before returning.
    pub fn semisimple_decompose(&self) -> Result<Decomposition, AlgebraError> {
        self.semisimple_decompose_with_budget(IDEAL_SCAN_BUDGET)
    }

    pub fn semisimple_decompose_with_budget(
        &self,
        budget: u128,
    ) -> Result<Decomposition, AlgebraError> {
        if self.is_abelian() {
            let lines = (0..self.dim)
                .map(|i| {
                    let mut e = vec![0u64; self.dim];
                    e[i] = 1;
                    Subspace::from_rows(&self.field, self.dim, vec![e])
                })
                .collect();
            return Ok(Decomposition::Abelian(lines));
        }
        if !self.center().is_zero() {
            return Err(AlgebraError::HasCenter);
        }
        let points = projective_count(self.field.order(), self.dim);
        if points > budget {
            return Err(AlgebraError::TooLargeForExhaustive { points, budget });
        }
        // Any closure of minimal rank is a minimal ideal, and every
        // minimal ideal arises as the closure of each of its points, so
        // collecting the distinct minimal-rank closures finds them all.
        let mut min_rank = self.dim;
        let mut ideals: Vec<Subspace> = Vec::new();
        for seed in projective_reps(&self.field, self.dim) {
            let closure = self.ideal_closure(std::slice::from_ref(&seed))?;
            if closure.dim() < min_rank {
                min_rank = closure.dim();
                ideals.clear();
            }
            if closure.dim() == min_rank && !ideals.contains(&closure) {
                ideals.push(closure);
            }
        }
        // Direct-sum verification.
        let mut sum = Subspace::zero(&self.field, self.dim);
        for ideal in &ideals {
            sum = sum.sum(ideal);
        }
        assert!(sum.is_full(), "minimal ideals must sum to the whole algebra");
        let mut total = 0;
        for (a, ia) in ideals.iter().enumerate() {
            total += ia.dim();
            for ib in ideals.iter().skip(a + 1) {
                assert!(ia.intersect(ib).is_zero(), "minimal ideals must intersect trivially");
                for u in ia.basis_rows() {
                    for v in ib.basis_rows() {
                        assert!(
                            self.product(&u, &v).iter().all(|&c| c == 0),
                            "distinct minimal ideals must annihilate each other"
                        );
                    }
                }
            }
        }
        assert_eq!(total, self.dim, "decomposition dimensions must add up");
        for ideal in &ideals {
            let restricted = self.restrict_to(ideal)?;
            assert!(
                restricted.is_simple()? || restricted.dim() == 1,
                "minimal ideals must be simple"
            );
        }
        Ok(Decomposition::Semisimple(ideals))
    }

    /// For a 3-dimensional algebra with full product: the matrix `A`
    /// expressing `f_i = <e_{i+1}, e_{i+2}>` (indices cyclic) in the
    /// standard basis, together with invertibility and symmetry flags.
    /// The algebra satisfies the Jacobi identity iff `A` is symmetric.
    pub fn gram_matrix_3dim(&self) -> Result<GramReport, AlgebraError> {
        if self.dim != 3 {
            return Err(AlgebraError::NotDim3(self.dim));
        }
        let f = &self.field;
        let mut a = Matrix::zeros(f, 3, 3);
        for i in 0..3 {
            let u = (i + 1) % 3;
            let v = (i + 2) % 3;
            let mut eu = vec![0u64; 3];
            eu[u] = 1;
            let mut ev = vec![0u64; 3];
            ev[v] = 1;
            let fi = self.product(&eu, &ev);
            for j in 0..3 {
                a.set(i, j, fi[j]);
            }
        }
        let invertible = a.is_invertible();
        if !invertible {
            return Err(AlgebraError::ProductNotFull);
        }
        let symmetric = a == a.transpose();
        Ok(GramReport { matrix: a, invertible, symmetric })
    }

    /// Checks whether a matrix respects all basis products:
    /// `<e_i M, e_j M> = (<e_i, e_j>) M`.
    pub fn is_automorphism_matrix(&self, m: &Matrix) -> bool {
        if m.rows() != self.dim || m.cols() != self.dim || !m.is_invertible() {
            return false;
        }
        let rows = m.row_vecs();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let lhs = self.product(&rows[i], &rows[j]);
                let rhs = m.apply_row(self.pair(i, j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubspaceFlags {
    pub is_subalgebra: bool,
    pub is_ideal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityFlags {
    pub abelian: bool,
    pub jacobi: bool,
    pub malcev: bool,
}

/// Outcome of [`AcAlgebra::semisimple_decompose`].
#[derive(Debug, Clone)]
pub enum Decomposition {
    /// The minimal ideals of a non-abelian semisimple algebra.
    Semisimple(Vec<Subspace>),
    /// An abelian algebra decomposes into coordinate lines.
    Abelian(Vec<Subspace>),
}

impl Decomposition {
    pub fn ideals(&self) -> &[Subspace] {
        match self {
            Decomposition::Semisimple(v) | Decomposition::Abelian(v) => v,
        }
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, Decomposition::Abelian(_))
    }
}

#[derive(Debug, Clone)]
pub struct GramReport {
    pub matrix: Matrix,
    pub invertible: bool,
    pub symmetric: bool,
}

/// The split three-dimensional simple Lie algebra with basis (e, h, f):
/// `<e_0,e_1> = -2e_0`, `<e_0,e_2> = e_1`, `<e_1,e_2> = -2e_2`.
pub fn sl2(field: &Field) -> AcAlgebra {
    AcAlgebra::from_int_table(
        field,
        3,
        &[
            (0, 1, &[-2, 0, 0]),
            (0, 2, &[0, 1, 0]),
            (1, 2, &[0, 0, -2]),
        ],
    )
    .expect("valid table")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::agl_dim4_algebra;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn rejects_unordered_pair() {
        let f = Field::prime(7).unwrap();
        let err = AcAlgebra::from_int_table(
            &f,
            3,
            &[(0, 1, &[0, 0, 1]), (2, 0, &[1, 0, 0])],
        )
        .unwrap_err();
        assert_eq!(err, AlgebraError::PairNotStrictlyOrdered { i: 2, j: 0 });
    }

    #[test]
    fn sl2_products() {
        let l = sl2(&f5());
        let e0 = [1, 0, 0];
        let e1 = [0, 1, 0];
        let e2 = [0, 0, 1];
        assert_eq!(l.product(&e0, &e2), vec![0, 1, 0]);
        assert_eq!(l.product(&e2, &e0), vec![0, 4, 0]);
        assert_eq!(l.product(&e0, &e1), vec![3, 0, 0]);
        assert_eq!(l.product(&e1, &e1), vec![0, 0, 0]);
    }

    #[test]
    fn agl_dim4_first_product_line() {
        let f = Field::prime(7).unwrap();
        let l = agl_dim4_algebra(&f);
        assert_eq!(l.product(&[1, 0, 0, 0], &[0, 1, 0, 0]), vec![0, 1, 2, 5]);
    }

    #[test]
    fn literal_integer_tables_reduce_into_the_field() {
        // Table construction from a user-supplied list of integer
        // product lines, entries reduced mod p.
        let f = Field::prime(7).unwrap();
        let l = AcAlgebra::from_int_table(
            &f,
            4,
            &[
                (0, 1, &[1, 1, 5, 3]),
                (0, 2, &[-4, -4, 0, -2]),
                (0, 3, &[2, 4, -4, -2]),
                (1, 2, &[-3, -1, 1, 3]),
                (1, 3, &[2, 0, 4, 4]),
                (2, 3, &[-3, -5, -1, -1]),
            ],
        )
        .unwrap();
        assert_eq!(l.product(&[1, 0, 0, 0], &[0, 1, 0, 0]), vec![1, 1, 5, 3]);
        assert_eq!(l.pair(2, 3), &[4, 2, 6, 6]);
    }

    #[test]
    fn ideal_closure_examples() {
        let l = sl2(&f5());
        assert!(l.ideal_closure(&[vec![0, 0, 0]]).unwrap().is_zero());
        assert!(l.ideal_closure(&[vec![1, 0, 0]]).unwrap().is_full());
    }

    #[test]
    fn ideal_closure_is_minimal_and_invariant() {
        // Output closures absorb right multiplication, and re-closing
        // any spanning subset returns the same subspace.
        let double = sl2(&f3()).direct_power(2);
        for seed in [vec![1, 0, 2, 0, 0, 0], vec![0, 0, 0, 1, 1, 0], vec![1, 0, 0, 0, 1, 0]] {
            let closure = double.ideal_closure(&[seed]).unwrap();
            for u in closure.basis_rows() {
                for k in 0..double.dim() {
                    let mut e = vec![0u64; double.dim()];
                    e[k] = 1;
                    assert!(closure.contains(&double.product(&u, &e)));
                }
            }
            let reclosed = double.ideal_closure(&closure.basis_rows()).unwrap();
            assert_eq!(reclosed, closure);
        }
    }

    #[test]
    fn subspace_flags_for_sl2() {
        let l = sl2(&f3());
        let zero = Subspace::zero(&f3(), 3);
        let full = Subspace::full(&f3(), 3);
        assert_eq!(
            l.subspace_tests(&zero).unwrap(),
            SubspaceFlags { is_subalgebra: true, is_ideal: true }
        );
        assert_eq!(
            l.subspace_tests(&full).unwrap(),
            SubspaceFlags { is_subalgebra: true, is_ideal: true }
        );
        let span_e0 = Subspace::from_rows(&f3(), 3, vec![vec![1, 0, 0]]);
        assert_eq!(
            l.subspace_tests(&span_e0).unwrap(),
            SubspaceFlags { is_subalgebra: true, is_ideal: false }
        );
        let span_e0_e1 = Subspace::from_rows(&f3(), 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        assert_eq!(
            l.subspace_tests(&span_e0_e1).unwrap(),
            SubspaceFlags { is_subalgebra: true, is_ideal: false }
        );
    }

    #[test]
    fn center_examples() {
        assert!(AcAlgebra::zero_algebra(&f3(), 2).center().is_full());
        assert!(sl2(&f5()).center().is_zero());
        assert!(agl_dim4_algebra(&f3()).center().is_zero());
    }

    #[test]
    fn simplicity() {
        assert!(!AcAlgebra::zero_algebra(&f3(), 1).is_simple().unwrap());
        assert!(AcAlgebra::zero_algebra(&f3(), 1).is_simple_as_paper().unwrap());
        assert!(sl2(&Field::prime(7).unwrap()).is_simple().unwrap());
        assert!(agl_dim4_algebra(&f3()).is_simple().unwrap());
        let double = sl2(&f3()).direct_power(2);
        assert!(!double.is_simple().unwrap());
    }

    #[test]
    fn identities_for_sl2_and_abelian() {
        let abelian = AcAlgebra::zero_algebra(&f3(), 2);
        let flags = abelian.identity_checks();
        assert!(flags.abelian && flags.jacobi && flags.malcev);

        let l = sl2(&Field::prime(7).unwrap());
        let flags = l.identity_checks();
        assert!(!flags.abelian);
        assert!(flags.jacobi);
        assert!(flags.malcev);
    }

    #[test]
    fn direct_sum_shape() {
        let l = sl2(&f3());
        let sum = l.direct_sum(&AcAlgebra::zero_algebra(&f3(), 1)).unwrap();
        assert_eq!(sum.dim(), 4);
        // The appended basis vector is central.
        assert!(sum.center().contains(&[0, 0, 0, 1]));

        let double = l.direct_power(2);
        assert_eq!(double.dim(), 6);
        assert!(double.center().is_zero());
    }

    #[test]
    fn decompose_direct_sum_of_sl2() {
        let double = sl2(&f3()).direct_power(2);
        let decomp = double.semisimple_decompose().unwrap();
        let ideals = decomp.ideals();
        assert_eq!(ideals.len(), 2);
        assert!(ideals.iter().all(|i| i.dim() == 3));
    }

    #[test]
    fn decompose_simple_gives_one_ideal() {
        let l = sl2(&Field::prime(7).unwrap());
        let decomp = l.semisimple_decompose().unwrap();
        assert_eq!(decomp.ideals().len(), 1);
        assert!(decomp.ideals()[0].is_full());
    }

    #[test]
    fn decompose_abelian() {
        let decomp = AcAlgebra::zero_algebra(&f3(), 2).semisimple_decompose().unwrap();
        assert!(decomp.is_abelian());
        assert_eq!(decomp.ideals().len(), 2);
    }

    #[test]
    fn generated_subalgebras() {
        let l = sl2(&f3());
        let full = l
            .generated_subalgebra(&[vec![1, 0, 0], vec![0, 0, 1]])
            .unwrap();
        assert!(full.is_full());
        // {e_0, e_1} spans a 2-dimensional subalgebra only.
        let partial = l
            .generated_subalgebra(&[vec![1, 0, 0], vec![0, 1, 0]])
            .unwrap();
        assert_eq!(partial.dim(), 2);

        let tuple = l.generating_tuple().unwrap();
        assert_eq!(tuple.len(), 2);

        let la = agl_dim4_algebra(&f3());
        assert!(la
            .generated_subalgebra(&[vec![1, 0, 0, 0], vec![0, 1, 0, 0]])
            .unwrap()
            .is_full());
    }

    #[test]
    fn gram_matrix_examples() {
        // <e_1,e_2> = e_0, <e_2,e_0> = e_1, <e_0,e_1> = e_2 has A = I.
        let f = f5();
        let l = AcAlgebra::from_int_table(
            &f,
            3,
            &[
                (1, 2, &[1, 0, 0]),
                (0, 2, &[0, -1, 0]),
                (0, 1, &[0, 0, 1]),
            ],
        )
        .unwrap();
        let report = l.gram_matrix_3dim().unwrap();
        assert_eq!(report.matrix, Matrix::identity(&f, 3));
        assert!(report.symmetric);

        let report = sl2(&f5()).gram_matrix_3dim().unwrap();
        assert!(report.invertible);
        assert!(report.symmetric);
    }

    #[test]
    fn non_jacobi_table_has_asymmetric_gram() {
        // <e_1,e_2> = e_1 breaks symmetry (a_01 = 1 without mirror).
        let f = f5();
        let l = AcAlgebra::from_int_table(
            &f,
            3,
            &[
                (1, 2, &[0, 1, 0]),
                (0, 2, &[0, 0, -1]),
                (0, 1, &[1, 0, 0]),
            ],
        )
        .unwrap();
        let report = l.gram_matrix_3dim().unwrap();
        assert!(!report.symmetric);
        assert!(!l.identity_checks().jacobi);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_vec() -> impl Strategy<Value = Vec<u64>> {
            proptest::collection::vec(0u64..5, 3)
        }

        proptest! {
            #[test]
            fn bilinear_and_alternating(x in arb_vec(), y in arb_vec(), z in arb_vec(), lam in 0u64..5) {
                let f = Field::prime(5).unwrap();
                let l = sl2(&f);
                // <x, x> = 0 and <x, y> = -<y, x>.
                prop_assert!(l.product(&x, &x).iter().all(|&c| c == 0));
                let xy = l.product(&x, &y);
                let yx = l.product(&y, &x);
                for (a, b) in xy.iter().zip(&yx) {
                    prop_assert_eq!(*a, f.neg_rep(*b));
                }
                // <x + lam*y, z> = <x, z> + lam <y, z>.
                let mixed: Vec<u64> = x.iter().zip(&y).map(|(&a, &b)| f.add_rep(a, f.mul_rep(lam, b))).collect();
                let lhs = l.product(&mixed, &z);
                let xz = l.product(&x, &z);
                let yz = l.product(&y, &z);
                for k in 0..3 {
                    prop_assert_eq!(lhs[k], f.add_rep(xz[k], f.mul_rep(lam, yz[k])));
                }
            }

            #[test]
            fn jacobi_iff_gram_symmetric(c0 in arb_vec(), c1 in arb_vec(), c2 in arb_vec()) {
                let f = Field::prime(5).unwrap();
                let l = AcAlgebra::from_rep_table(&f, 3, vec![c0, c1, c2]);
                if let Ok(report) = l.gram_matrix_3dim() {
                    prop_assert_eq!(report.symmetric, l.identity_checks().jacobi);
                }
            }
        }
    }
}
