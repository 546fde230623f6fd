//! Row-major dense matrices with exact entries.

use std::fmt;

use super::{pair_index, LinalgError};
use crate::field::{Field, FieldElem};

/// A dense matrix over a [`Field`].  Entries are stored as packed
/// representatives (see [`Field::encode`]) in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_reps(field: &Field, rows: usize, cols: usize, data: Vec<u64>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "data length must match dimensions");
        debug_assert!(data.iter().all(|&x| x < field.order()));
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Builds a matrix from signed integers taken through the prime
    /// subfield; handy for literal tables.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&n| field.from_int(n)));
        }
        Matrix { field: field.clone(), rows: r, cols: c, data }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, rep: u64) {
        debug_assert!(rep < self.field.order());
        self.data[i * self.cols + j] = rep;
    }

    pub fn get_elem(&self, i: usize, j: usize) -> FieldElem {
        self.field.elem_from_rep(self.get(i, j))
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_eq!(self.field, other.field);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.field.add_rep(a, b))
            .collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_eq!(self.field, other.field);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.field.sub_rep(a, b))
            .collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, rep: u64) -> Matrix {
        let data = self.data.iter().map(|&a| self.field.mul_rep(a, rep)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        assert_eq!(self.field, other.field);
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        if f.is_prime_field() {
            // Products of reduced entries fit in u64 with plenty of
            // headroom (p <= 2^16), so the reduction is deferred to the
            // end of each dot product.
            let p = f.characteristic();
            for i in 0..self.rows {
                for j in 0..other.cols {
                    let mut acc: u64 = 0;
                    for k in 0..self.cols {
                        acc += self.get(i, k) * other.get(k, j);
                    }
                    out.data[i * other.cols + j] = acc % p;
                }
            }
        } else {
            for i in 0..self.rows {
                for j in 0..other.cols {
                    let mut acc = 0;
                    for k in 0..self.cols {
                        acc = f.add_rep(acc, f.mul_rep(self.get(i, k), other.get(k, j)));
                    }
                    out.data[i * other.cols + j] = acc;
                }
            }
        }
        out
    }

    /// `v * M` for a row vector `v`.
    pub fn apply_row(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![0u64; self.cols];
        if f.is_prime_field() {
            let p = f.characteristic();
            for j in 0..self.cols {
                let mut acc: u64 = 0;
                for (i, &vi) in v.iter().enumerate() {
                    acc += vi * self.get(i, j);
                }
                out[j] = acc % p;
            }
        } else {
            for j in 0..self.cols {
                let mut acc = 0;
                for (i, &vi) in v.iter().enumerate() {
                    acc = f.add_rep(acc, f.mul_rep(vi, self.get(i, j)));
                }
                out[j] = acc;
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of an invertible matrix, by checking the
    /// divisors of `bound` (callers pass a known multiple of the order,
    /// e.g. the group order).  Returns `None` if no divisor works.
    pub fn order_dividing(&self, bound: u64) -> Option<u64> {
        let id = Matrix::identity(&self.field, self.rows);
        let mut divisors: Vec<u64> = (1..=bound).filter(|d| bound % d == 0).collect();
        divisors.sort_unstable();
        divisors.into_iter().find(|&d| self.pow(d) == id)
    }

    /// In-place row reduction to reduced row echelon form.
    /// Returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            self.data.swap_range(pr * self.cols, row * self.cols, self.cols);
            let inv = f.inv_rep(self.get(row, col)).expect("pivot is nonzero");
            for j in col..self.cols {
                let v = f.mul_rep(self.get(row, j), inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && self.get(r, col) != 0 {
                    let factor = self.get(r, col);
                    for j in col..self.cols {
                        let v = f.sub_rep(self.get(r, j), f.mul_rep(factor, self.get(row, j)));
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn det(&self) -> u64 {
        assert_eq!(self.rows, self.cols);
        let f = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1u64;
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| m.get(r, col) != 0) else {
                return 0;
            };
            if pr != col {
                m.data.swap_range(pr * n, col * n, n);
                det = f.neg_rep(det);
            }
            let pivot = m.get(col, col);
            det = f.mul_rep(det, pivot);
            let inv = f.inv_rep(pivot).expect("pivot is nonzero");
            for r in (col + 1)..n {
                if m.get(r, col) != 0 {
                    let factor = f.mul_rep(m.get(r, col), inv);
                    for j in col..n {
                        let v = f.sub_rep(m.get(r, j), f.mul_rep(factor, m.get(col, j)));
                        m.set(r, j, v);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref_in_place();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(LinalgError::NotInvertible);
        }
        let mut out = Matrix::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(out)
    }

    /// Solves the column system `self * x = rhs` exactly.
    ///
    /// Returns the rank, the reduced row echelon form, a canonical basis
    /// of the right kernel `{x : M x = 0}`, and a particular solution
    /// for each requested right-hand side.
    pub fn rref_solve(&self, rhs: Option<&Matrix>) -> Result<SolveReport, LinalgError> {
        if let Some(b) = rhs {
            if b.rows != self.rows {
                return Err(LinalgError::DimensionMismatch(format!(
                    "rhs has {} rows, matrix has {}",
                    b.rows, self.rows
                )));
            }
            if b.field != self.field {
                return Err(LinalgError::FieldMismatch);
            }
        }
        let f = &self.field;
        let extra = rhs.map_or(0, |b| b.cols);
        let mut aug = Matrix::zeros(f, self.rows, self.cols + extra);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            if let Some(b) = rhs {
                for j in 0..extra {
                    aug.set(i, self.cols + j, b.get(i, j));
                }
            }
        }
        let aug_pivots = aug.rref_in_place();
        let pivots: Vec<usize> = aug_pivots.iter().copied().filter(|&c| c < self.cols).collect();
        let rank = pivots.len();

        let mut rref = Matrix::zeros(f, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                rref.set(i, j, aug.get(i, j));
            }
        }

        // Kernel basis: one vector per free column, canonical form.
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut kernel_rows = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = f.neg_rep(rref.get(r, free));
            }
            kernel_rows.push(v);
        }
        let kernel = super::Subspace::from_rows(f, self.cols, kernel_rows);

        let outcome = if rhs.is_none() {
            SolveOutcome::NotRequested
        } else if aug_pivots.iter().any(|&c| c >= self.cols) {
            SolveOutcome::Inconsistent
        } else {
            let mut sol = Matrix::zeros(f, self.cols, extra);
            for (r, &c) in pivots.iter().enumerate() {
                for j in 0..extra {
                    sol.set(c, j, aug.get(r, self.cols + j));
                }
            }
            SolveOutcome::Solution(sol)
        };

        Ok(SolveReport { rank, rref, kernel, outcome })
    }

    /// Induced action on the exterior square: row `pair_index(i, j)` of
    /// the result expands `(e_i ^ e_j) * M` in the lexicographic wedge
    /// basis.  Functorial: `wedge(A * B) = wedge(A) * wedge(B)`.
    pub fn wedge_square(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let d = self.rows;
        let dd = d * (d - 1) / 2;
        let f = &self.field;
        let mut out = Matrix::zeros(f, dd, dd);
        for i in 0..d {
            for j in (i + 1)..d {
                let r = pair_index(i, j, d);
                for k in 0..d {
                    for l in (k + 1)..d {
                        let plus = f.mul_rep(self.get(i, k), self.get(j, l));
                        let minus = f.mul_rep(self.get(i, l), self.get(j, k));
                        out.set(r, pair_index(k, l, d), f.sub_rep(plus, minus));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Induced action on the symmetric square, basis
    /// `{e_i . e_j : i <= j}` ordered lexicographically.
    pub fn sym_square(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let d = self.rows;
        let f = &self.field;
        // Basis index of e_i . e_j with i <= j.
        let sym_index = |i: usize, j: usize| -> usize { i * d - i * (i + 1) / 2 + j };
        let dim = d * (d + 1) / 2;
        let mut out = Matrix::zeros(f, dim, dim);
        for i in 0..d {
            for j in i..d {
                let r = sym_index(i, j);
                for k in 0..d {
                    for l in k..d {
                        let mut v = f.mul_rep(self.get(i, k), self.get(j, l));
                        if k < l {
                            v = f.add_rep(v, f.mul_rep(self.get(i, l), self.get(j, k)));
                        }
                        out.set(r, sym_index(k, l), v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; the row index of the result is
    /// `i * other.rows + k` for row `i` of `self` and row `k` of `other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field);
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(
                            i * other.rows + k,
                            j * other.cols + l,
                            f.mul_rep(a, other.get(k, l)),
                        );
                    }
                }
            }
        }
        out
    }
}

trait SwapRange {
    fn swap_range(&mut self, a: usize, b: usize, len: usize);
}

impl SwapRange for Vec<u64> {
    fn swap_range(&mut self, a: usize, b: usize, len: usize) {
        if a == b {
            return;
        }
        for i in 0..len {
            self.swap(a + i, b + i);
        }
    }
}

/// Result of [`Matrix::rref_solve`].
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub rank: usize,
    pub rref: Matrix,
    pub kernel: super::Subspace,
    pub outcome: SolveOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    NotRequested,
    Inconsistent,
    Solution(Matrix),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn rref_identity() {
        let id = Matrix::identity(&f5(), 3);
        let report = id.rref_solve(None).unwrap();
        assert_eq!(report.rank, 3);
        assert_eq!(report.kernel.dim(), 0);
    }

    #[test]
    fn rref_zero() {
        let f3 = Field::prime(3).unwrap();
        let z = Matrix::zeros(&f3, 2, 2);
        let report = z.rref_solve(None).unwrap();
        assert_eq!(report.rank, 0);
        assert_eq!(report.kernel.dim(), 2);
    }

    #[test]
    fn rref_rank_one_system() {
        // Hand elimination mod 5: rows (1 2), (2 4) are proportional;
        // the right kernel of the column system is spanned by (3, 1)
        // because 1*3 + 2*1 = 5 = 0, and x = (1, 0) solves M x = (1, 2)^t.
        let f = f5();
        let m = Matrix::from_ints(&f, &[&[1, 2], &[2, 4]]);
        let rhs = Matrix::from_ints(&f, &[&[1], &[2]]);
        let report = m.rref_solve(Some(&rhs)).unwrap();
        assert_eq!(report.rank, 1);
        assert!(report.kernel.contains(&[3, 1]));
        assert_eq!(report.kernel.dim(), 1);
        match report.outcome {
            SolveOutcome::Solution(ref x) => {
                // Verify M x = rhs.
                assert_eq!(m.mul(x), rhs);
            }
            ref other => panic!("expected a solution, got {other:?}"),
        }
    }

    #[test]
    fn inconsistent_system() {
        let f = f5();
        let m = Matrix::from_ints(&f, &[&[1, 2], &[2, 4]]);
        let rhs = Matrix::from_ints(&f, &[&[1], &[3]]);
        let report = m.rref_solve(Some(&rhs)).unwrap();
        assert_eq!(report.outcome, SolveOutcome::Inconsistent);
    }

    #[test]
    fn wedge_of_identity() {
        for d in 2..6 {
            let id = Matrix::identity(&f5(), d);
            assert_eq!(id.wedge_square().unwrap(), Matrix::identity(&f5(), d * (d - 1) / 2));
        }
    }

    #[test]
    fn wedge_dim2_is_det() {
        let f = f5();
        let m = Matrix::from_ints(&f, &[&[1, 2], &[3, 4]]);
        let w = m.wedge_square().unwrap();
        assert_eq!(w.rows(), 1);
        assert_eq!(w.get(0, 0), m.det());
    }

    #[test]
    fn wedge_of_cycle_functorial() {
        // The 3-cycle permutation matrix e_0 -> e_1 -> e_2 -> e_0.
        let f = f5();
        let m = Matrix::from_ints(&f, &[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let w = m.wedge_square().unwrap();
        // e_0^e_1 -> e_1^e_2, e_0^e_2 -> e_1^e_0 = -(e_0^e_1),
        // e_1^e_2 -> e_2^e_0 = -(e_0^e_2).
        let expect = Matrix::from_ints(&f, &[&[0, 0, 1], &[-1, 0, 0], &[0, -1, 0]]);
        assert_eq!(w, expect);
        assert_eq!(m.mul(&m).wedge_square().unwrap(), w.mul(&w));
    }

    #[test]
    fn det_and_inverse() {
        let f = Field::prime(7).unwrap();
        let m = Matrix::from_ints(&f, &[&[1, 2, 0], &[0, 1, 5], &[3, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(&f, 3));
        assert_eq!(f.mul_rep(m.det(), inv.det()), 1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix(d: usize) -> impl Strategy<Value = Matrix> {
            proptest::collection::vec(0u64..7, d * d).prop_map(move |data| {
                Matrix::from_reps(&Field::prime(7).unwrap(), d, d, data)
            })
        }

        proptest! {
            #[test]
            fn rref_idempotent_and_rank_transpose(m in arb_matrix(4)) {
                let (r1, p1) = m.rref();
                let (r2, p2) = r1.rref();
                prop_assert_eq!(&r1, &r2);
                prop_assert_eq!(p1.len(), p2.len());
                prop_assert_eq!(m.rank(), m.transpose().rank());
            }

            #[test]
            fn wedge_multiplicative(a in arb_matrix(4), b in arb_matrix(4)) {
                prop_assume!(a.is_invertible() && b.is_invertible());
                let lhs = a.mul(&b).wedge_square().unwrap();
                let rhs = a.wedge_square().unwrap().mul(&b.wedge_square().unwrap());
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
