//! Subspaces in canonical reduced-row-echelon form.

use std::fmt;

use super::Matrix;
use crate::field::Field;

/// A subspace of `F^n`, stored as its unique RREF row basis.  Two
/// subspaces are equal iff their canonical matrices are identical, so
/// `==` is subspace equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of F^{}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient) }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(field, ambient) }
    }

    /// Span of the given row vectors, canonicalized.
    pub fn from_rows(field: &Field, ambient: usize, rows: Vec<Vec<u64>>) -> Subspace {
        for r in &rows {
            assert_eq!(r.len(), ambient, "row length must match ambient dimension");
        }
        let n = rows.len();
        let mut m = Matrix::from_reps(field, n, ambient, rows.into_iter().flatten().collect());
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        let mut basis = Matrix::zeros(field, rank, ambient);
        for i in 0..rank {
            for j in 0..ambient {
                basis.set(i, j, m.get(i, j));
            }
        }
        Subspace { ambient, basis }
    }

    pub fn from_matrix(m: &Matrix) -> Subspace {
        Subspace::from_rows(m.field(), m.cols(), m.row_vecs())
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<u64>> {
        self.basis.row_vecs()
    }

    /// Reduces `v` against the basis; returns the residue.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field().clone();
        let mut v = v.to_vec();
        for i in 0..self.dim() {
            let pivot = (0..self.ambient)
                .find(|&j| self.basis.get(i, j) != 0)
                .expect("basis rows are nonzero");
            let c = v[pivot];
            if c != 0 {
                for j in 0..self.ambient {
                    v[j] = f.sub_rep(v[j], f.mul_rep(c, self.basis.get(i, j)));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::from_rows(self.field(), self.ambient, rows)
    }

    /// Intersection computed from the kernel of the stacked basis.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let f = self.field().clone();
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Subspace::zero(&f, self.ambient);
        }
        // x in both spans iff x = u * A = v * B; solve the column system
        // [A^t | -B^t] (u, v)^t = 0 and read off u * A.
        let mut stacked = Matrix::zeros(&f, self.ambient, a + b);
        for j in 0..a {
            for i in 0..self.ambient {
                stacked.set(i, j, self.basis.get(j, i));
            }
        }
        for j in 0..b {
            for i in 0..self.ambient {
                stacked.set(i, a + j, f.neg_rep(other.basis.get(j, i)));
            }
        }
        let kernel = stacked.rref_solve(None).expect("no rhs").kernel;
        let rows = (0..kernel.dim())
            .map(|r| {
                let coeffs = kernel.basis.row(r);
                let mut v = vec![0u64; self.ambient];
                for (j, &c) in coeffs[..a].iter().enumerate() {
                    if c != 0 {
                        for i in 0..self.ambient {
                            v[i] = f.add_rep(v[i], f.mul_rep(c, self.basis.get(j, i)));
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::from_rows(&f, self.ambient, rows)
    }

    /// Image of the subspace under a right-acting matrix.
    pub fn apply(&self, m: &Matrix) -> Subspace {
        let rows = (0..self.dim()).map(|i| m.apply_row(self.basis.row(i))).collect();
        Subspace::from_rows(self.field(), m.cols(), rows)
    }

    /// All vectors of the subspace (coefficients enumerated in base q).
    pub fn all_vectors(&self) -> Vec<Vec<u64>> {
        let f = self.field().clone();
        let q = f.order();
        let d = self.dim();
        let total = (q as u128).pow(d as u32) as u64;
        let mut out = Vec::with_capacity(total as usize);
        for idx in 0..total {
            let mut v = vec![0u64; self.ambient];
            let mut t = idx;
            for i in 0..d {
                let c = t % q;
                t /= q;
                if c != 0 {
                    for j in 0..self.ambient {
                        v[j] = f.add_rep(v[j], f.mul_rep(c, self.basis.get(i, j)));
                    }
                }
            }
            out.push(v);
        }
        out
    }
}

/// All vectors of `F^n` in enumeration order (base-q digits, coordinate
/// 0 least significant).
pub fn all_vectors(field: &Field, n: usize) -> impl Iterator<Item = Vec<u64>> + '_ {
    let q = field.order();
    let total = (q as u128).pow(n as u32) as u64;
    (0..total).map(move |idx| {
        let mut v = Vec::with_capacity(n);
        let mut t = idx;
        for _ in 0..n {
            v.push(t % q);
            t /= q;
        }
        v
    })
}

/// Canonical projective representatives: first nonzero coordinate 1,
/// enumerated by the position of that coordinate and then base-q digits
/// of the tail.  Yields exactly `(q^n - 1)/(q - 1)` vectors.
pub fn projective_reps(field: &Field, n: usize) -> impl Iterator<Item = Vec<u64>> + '_ {
    let q = field.order();
    (0..n).flat_map(move |lead| {
        let tail = n - lead - 1;
        let total = (q as u128).pow(tail as u32) as u64;
        (0..total).map(move |idx| {
            let mut v = vec![0u64; n];
            v[lead] = 1;
            let mut t = idx;
            for j in (lead + 1)..n {
                v[j] = t % q;
                t /= q;
            }
            v
        })
    })
}

/// Number of projective points of `F^n`.
pub fn projective_count(q: u64, n: usize) -> u128 {
    let qn = (q as u128).pow(n as u32);
    (qn - 1) / (q as u128 - 1)
}

/// The `idx`-th canonical projective representative, in the same order
/// as [`projective_reps`]; lets the exhaustive scans stream seeds
/// instead of materializing them.
pub fn projective_rep_at(field: &Field, n: usize, mut idx: u64) -> Vec<u64> {
    let q = field.order();
    for lead in 0..n {
        let tail = n - lead - 1;
        let block = (q as u128).pow(tail as u32) as u64;
        if idx < block {
            let mut v = vec![0u64; n];
            v[lead] = 1;
            let mut t = idx;
            for j in (lead + 1)..n {
                v[j] = t % q;
                t /= q;
            }
            return v;
        }
        idx -= block;
    }
    panic!("projective index out of range");
}

/// Enumerates every subspace of `F^n` of the given dimension, via RREF
/// pivot-column profiles; deterministic order.
pub fn subspaces_of_dim(field: &Field, n: usize, dim: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    if dim == 0 {
        out.push(Subspace::zero(field, n));
        return out;
    }
    if dim > n {
        return out;
    }
    let q = field.order();
    // Iterate over pivot column combinations in lexicographic order.
    let mut pivots: Vec<usize> = (0..dim).collect();
    loop {
        // Free positions: entries to the right of each pivot that are
        // not themselves pivot columns.
        let mut free = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in (pc + 1)..n {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let total = (q as u128).pow(free.len() as u32);
        for idx in 0..total {
            let mut m = Matrix::zeros(field, dim, n);
            for (r, &pc) in pivots.iter().enumerate() {
                m.set(r, pc, 1);
            }
            let mut t = idx;
            for &(r, c) in &free {
                m.set(r, c, (t % q as u128) as u64);
                t /= q as u128;
            }
            out.push(Subspace { ambient: n, basis: m });
        }
        // Next pivot combination.
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pivots[i] < n - (dim - i) {
                pivots[i] += 1;
                for j in (i + 1)..dim {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All subspaces of `F^n`, dimension by dimension.
pub fn all_subspaces(field: &Field, n: usize) -> Vec<Subspace> {
    (0..=n).flat_map(|d| subspaces_of_dim(field, n, d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_equality() {
        let f = Field::prime(5).unwrap();
        let a = Subspace::from_rows(&f, 3, vec![vec![1, 2, 3], vec![0, 1, 1]]);
        let b = Subspace::from_rows(&f, 3, vec![vec![2, 4, 1], vec![1, 3, 4]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn membership_and_sum() {
        let f = Field::prime(3).unwrap();
        let a = Subspace::from_rows(&f, 3, vec![vec![1, 0, 0]]);
        let b = Subspace::from_rows(&f, 3, vec![vec![0, 1, 0]]);
        let s = a.sum(&b);
        assert!(s.contains(&[2, 1, 0]));
        assert!(!s.contains(&[0, 0, 1]));
        assert_eq!(a.intersect(&b).dim(), 0);
        assert_eq!(s.intersect(&a), a);
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        let f = Field::prime(3).unwrap();
        // Gaussian binomial [3 choose 1]_3 = [3 choose 2]_3 = 13.
        assert_eq!(subspaces_of_dim(&f, 3, 1).len(), 13);
        assert_eq!(subspaces_of_dim(&f, 3, 2).len(), 13);
        assert_eq!(all_subspaces(&f, 3).len(), 28);
    }

    #[test]
    fn projective_reps_count() {
        let f = Field::prime(3).unwrap();
        let reps: Vec<_> = projective_reps(&f, 3).collect();
        assert_eq!(reps.len() as u128, projective_count(3, 3));
        // Pairwise non-proportional.
        for (i, a) in reps.iter().enumerate() {
            for b in reps.iter().skip(i + 1) {
                let sa = Subspace::from_rows(&f, 3, vec![a.clone()]);
                assert!(!sa.contains(b));
            }
        }
    }
}
