//! Homogeneous-polynomial modules of GL(2,F) and their tensor,
//! exterior-square and symmetric-square decompositions.
//!
//! `V_m` is the space of degree-m homogeneous polynomials in X, Y with
//! basis `X^i Y^{m-i}` (i = 0..=m); a 2x2 matrix acts by substituting
//! `X -> a11 X + a12 Y`, `Y -> a21 X + a22 Y`.  The two-variable space
//! `V_{m,n}` has basis `X1^i Y1^{m-i} X2^j Y2^{n-j}` indexed by
//! `i*(n+1) + j`, realized as the Kronecker product action.
//!
//! The decomposition machinery produces three explicit maps per level:
//! the evaluation `pi : V_{m,n} -> V_{m+n}` (set X2 = X1, Y2 = Y1),
//! the multiplication `delta : det (x) V_{m-1,n-1} -> V_{m,n}` by
//! `X1 Y2 - Y1 X2`, and the submodule `W` generated by `X1^m X2^n`,
//! spanned by the binomial-weighted vectors `h_k`.  Every claimed
//! irreducible summand `det^i (x) V_{m+n-2i}` is realized by an
//! explicit intertwiner built from these maps.

use super::ConstructError;
use crate::field::Field;
use crate::linalg::{Matrix, ModuleRep, Subspace};

fn binomial_rep(field: &Field, n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    field.from_int((acc % field.characteristic() as u128) as i64)
}

/// The action of the given 2x2 generators on degree-m homogeneous
/// polynomials.  Requires `m < char F` (single-digit regime).
pub fn vm_module(
    m: usize,
    field: &Field,
    gens: &[Matrix],
) -> Result<ModuleRep, ConstructError> {
    let p = field.characteristic();
    if m as u64 >= p {
        return Err(ConstructError::DegreeTooLargeForChar { m, p });
    }
    let mats = gens
        .iter()
        .map(|g| vm_matrix(m, field, g))
        .collect::<Vec<_>>();
    Ok(ModuleRep::new(field, m + 1, mats)?)
}

/// Matrix of a single 2x2 generator on `V_m`.
pub fn vm_matrix(m: usize, field: &Field, g: &Matrix) -> Matrix {
    assert_eq!((g.rows(), g.cols()), (2, 2));
    let f = field;
    let (a11, a12, a21, a22) = (g.get(0, 0), g.get(0, 1), g.get(1, 0), g.get(1, 1));
    let mut out = Matrix::zeros(f, m + 1, m + 1);
    for i in 0..=m {
        let j = m - i;
        // (a11 X + a12 Y)^i convolved with (a21 X + a22 Y)^j.
        let first: Vec<u64> = (0..=i)
            .map(|s| {
                let c = binomial_rep(f, i, s);
                f.mul_rep(
                    c,
                    f.mul_rep(
                        f.pow_rep(a11, s as i64).expect("nonnegative"),
                        f.pow_rep(a12, (i - s) as i64).expect("nonnegative"),
                    ),
                )
            })
            .collect();
        let second: Vec<u64> = (0..=j)
            .map(|t| {
                let c = binomial_rep(f, j, t);
                f.mul_rep(
                    c,
                    f.mul_rep(
                        f.pow_rep(a21, t as i64).expect("nonnegative"),
                        f.pow_rep(a22, (j - t) as i64).expect("nonnegative"),
                    ),
                )
            })
            .collect();
        for (s, &cs) in first.iter().enumerate() {
            if cs == 0 {
                continue;
            }
            for (t, &ct) in second.iter().enumerate() {
                let u = s + t;
                let cur = out.get(i, u);
                out.set(i, u, f.add_rep(cur, f.mul_rep(cs, ct)));
            }
        }
    }
    out
}

/// The standard SL(2,p) generator pair over a field: the two unipotent
/// matrices `[[1,1],[0,1]]` and `[[1,0],[1,1]]`.
pub fn sl2_generators(field: &Field) -> Vec<Matrix> {
    vec![
        Matrix::from_ints(field, &[&[1, 1], &[0, 1]]),
        Matrix::from_ints(field, &[&[1, 0], &[1, 1]]),
    ]
}

/// Generators of GL(2,q): the SL(2) pair plus `diag(g, 1)` for the
/// least primitive element g.
pub fn gl2_generators(field: &Field) -> Vec<Matrix> {
    let mut gens = sl2_generators(field);
    let g = field
        .element_of_order(field.order() - 1)
        .expect("the multiplicative group is cyclic");
    let mut d = Matrix::identity(field, 2);
    d.set(0, 0, g.rep());
    gens.push(d);
    gens
}

/// Report of the tensor decomposition of `V_m (x) V_n`.
#[derive(Clone, Debug)]
pub struct CgTensorReport {
    pub m: usize,
    pub n: usize,
    /// Summands `(i, m + n - 2i)` meaning `det^i (x) V_{m+n-2i}`,
    /// i = 0..=min(m, n).
    pub multiplicities: Vec<(usize, usize)>,
    pub pi: Matrix,
    pub delta: Matrix,
    pub w_basis: Matrix,
    /// `summand_embeddings[i]` is an intertwiner from the model module
    /// `det^i (x) V_{m+n-2i}` into `V_{m,n}` with image the i-th
    /// summand.
    pub summand_embeddings: Vec<Matrix>,
    pub checks: CgChecks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CgChecks {
    pub pi_rank: usize,
    pub delta_rank: usize,
    pub maps_intertwine: bool,
    pub image_delta_equals_kernel_pi: bool,
    pub w_invariant_and_complements: bool,
    pub summands_verified: bool,
    pub dimension_identity: bool,
}

impl CgChecks {
    pub fn all(&self, m: usize, n: usize) -> bool {
        self.pi_rank == m + n + 1
            && self.delta_rank == m * n
            && self.maps_intertwine
            && self.image_delta_equals_kernel_pi
            && self.w_invariant_and_complements
            && self.summands_verified
            && self.dimension_identity
    }
}

/// Generator matrices on `V_{m,n}`.
fn vmn_gens(m: usize, n: usize, field: &Field, gens: &[Matrix]) -> Vec<Matrix> {
    gens.iter()
        .map(|g| vm_matrix(m, field, g).kron(&vm_matrix(n, field, g)))
        .collect()
}

/// Evaluation map `X2 -> X1, Y2 -> Y1` as a matrix.
fn pi_matrix(m: usize, n: usize, field: &Field) -> Matrix {
    let d = (m + 1) * (n + 1);
    let mut pi = Matrix::zeros(field, d, m + n + 1);
    for i in 0..=m {
        for j in 0..=n {
            pi.set(i * (n + 1) + j, i + j, 1);
        }
    }
    pi
}

/// Multiplication by `X1 Y2 - Y1 X2`, mapping `V_{m-1,n-1}` into
/// `V_{m,n}`.  Zero-row matrix when m or n is 0.
fn delta_matrix(m: usize, n: usize, field: &Field) -> Matrix {
    let dom = m * n;
    let mut delta = Matrix::zeros(field, dom, (m + 1) * (n + 1));
    for i in 0..m {
        for j in 0..n {
            let row = i * n + j;
            // X1 Y2 * X1^i Y1^{m-1-i} X2^j Y2^{n-1-j} -> (i+1, j)
            delta.set(row, (i + 1) * (n + 1) + j, 1);
            // -Y1 X2 * ... -> (i, j+1)
            delta.set(row, i * (n + 1) + j + 1, field.neg_rep(1));
        }
    }
    delta
}

/// Rows `h_k = sum_{i+j=k} C(m,i) C(n,j) X1^i Y1^{m-i} X2^j Y2^{n-j}`.
fn w_basis_matrix(m: usize, n: usize, field: &Field) -> Matrix {
    let d = (m + 1) * (n + 1);
    let mut w = Matrix::zeros(field, m + n + 1, d);
    for k in 0..=(m + n) {
        for i in 0..=m.min(k) {
            let j = k - i;
            if j > n {
                continue;
            }
            let c = field.mul_rep(binomial_rep(field, m, i), binomial_rep(field, n, j));
            w.set(k, i * (n + 1) + j, c);
        }
    }
    w
}

/// Decomposes `V_m (x) V_n` (as `V_{m,n}`) into
/// `det^i (x) V_{m+n-2i}` for i = 0..=min(m,n), realizing every
/// summand by an explicit intertwiner.  Requires `m <= n` and
/// `m + n < char F`.
pub fn cg_tensor_decompose(
    m: usize,
    n: usize,
    field: &Field,
    gens: &[Matrix],
) -> Result<CgTensorReport, ConstructError> {
    assert!(m <= n, "call with m <= n");
    let p = field.characteristic();
    if (m + n) as u64 >= p {
        return Err(ConstructError::CharTooSmall { m: m + n, p });
    }
    let f = field;
    let d = (m + 1) * (n + 1);
    let target_gens = vmn_gens(m, n, f, gens);
    let pi = pi_matrix(m, n, f);
    let delta = delta_matrix(m, n, f);
    let w_basis = w_basis_matrix(m, n, f);

    let mut maps_intertwine = true;
    for (g, tg) in gens.iter().zip(&target_gens) {
        let top = vm_matrix(m + n, f, g);
        if tg.mul(&pi) != pi.mul(&top) {
            maps_intertwine = false;
        }
        if m >= 1 && n >= 1 {
            let lower = vmn_gens(m - 1, n - 1, f, std::slice::from_ref(g))
                .pop()
                .expect("one generator");
            let twisted = lower.scale(g.det());
            if twisted.mul(&delta) != delta.mul(tg) {
                maps_intertwine = false;
            }
        }
    }

    let pi_rank = pi.rank();
    let delta_rank = delta.rank();
    // im delta <= ker pi, with equality by rank count.
    let composite_zero = m == 0 || n == 0 || {
        let prod = delta.mul(&pi);
        prod.data().iter().all(|&c| c == 0)
    };
    let image_delta_equals_kernel_pi =
        composite_zero && delta_rank == m * n && pi_rank == m + n + 1 && d == m * n + m + n + 1;

    // W is invariant, pi restricts to an isomorphism on it, and it
    // complements the image of delta.
    let w_space = Subspace::from_matrix(&w_basis);
    let mut w_invariant = w_space.dim() == m + n + 1;
    for tg in &target_gens {
        if !w_space.contains_subspace(&w_space.apply(tg)) {
            w_invariant = false;
        }
    }
    let im_delta = Subspace::from_matrix(&delta);
    let w_invariant_and_complements = w_invariant
        && w_basis.mul(&pi).rank() == m + n + 1
        && im_delta.intersect(&w_space).is_zero()
        && im_delta.sum(&w_space).is_full();

    // Multiplicities and explicit summand embeddings, by recursion on m.
    // The embedding of the top summand is the inverse of pi restricted
    // to W: pi sends h_k to C(m+n, k) times the k-th basis vector, so
    // row k of w_basis is rescaled by the inverse binomial (nonzero
    // since m + n < p).
    let mut w_embed = w_basis.clone();
    for k in 0..=(m + n) {
        let inv = f
            .inv_rep(binomial_rep(f, m + n, k))
            .expect("binomials below the characteristic are nonzero");
        for j in 0..d {
            let v = w_embed.get(k, j);
            w_embed.set(k, j, f.mul_rep(v, inv));
        }
    }
    let mut multiplicities = vec![(0usize, m + n)];
    let mut summand_embeddings = vec![w_embed];
    if m >= 1 {
        let inner = cg_tensor_decompose(m - 1, n - 1, f, gens)?;
        for ((i, k), emb) in inner.multiplicities.iter().zip(&inner.summand_embeddings) {
            multiplicities.push((i + 1, *k));
            summand_embeddings.push(emb.mul(&delta));
        }
    }

    // Verify each embedding: intertwines with its det-twisted model
    // action, has full rank, and the images stack to a direct sum.
    let mut summands_verified = true;
    let mut stack_rows: Vec<Vec<u64>> = Vec::new();
    for ((i, k), emb) in multiplicities.iter().zip(&summand_embeddings) {
        if emb.rank() != k + 1 {
            summands_verified = false;
        }
        for (g, tg) in gens.iter().zip(&target_gens) {
            let det_i = f.pow_rep(g.det(), *i as i64).expect("nonnegative");
            let model = vm_matrix(*k, f, g).scale(det_i);
            if model.mul(emb) != emb.mul(tg) {
                summands_verified = false;
            }
        }
        stack_rows.extend(emb.row_vecs());
    }
    let stacked = Matrix::from_reps(f, stack_rows.len(), d, stack_rows.concat());
    if stacked.rank() != d {
        summands_verified = false;
    }
    let dimension_identity =
        multiplicities.iter().map(|&(_, k)| k + 1).sum::<usize>() == d;

    let checks = CgChecks {
        pi_rank,
        delta_rank,
        maps_intertwine,
        image_delta_equals_kernel_pi,
        w_invariant_and_complements,
        summands_verified,
        dimension_identity,
    };
    Ok(CgTensorReport { m, n, multiplicities, pi, delta, w_basis, summand_embeddings, checks })
}

/// Report of the exterior/symmetric square decomposition of `V_m`.
#[derive(Clone, Debug)]
pub struct CgWedgeSymReport {
    pub m: usize,
    /// `det^i (x) V_{2m-2i}` for odd i.
    pub wedge_multiplicities: Vec<(usize, usize)>,
    /// `det^i (x) V_{2m-2i}` for even i.
    pub sym_multiplicities: Vec<(usize, usize)>,
    pub checks: WedgeSymChecks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WedgeSymChecks {
    pub swap_commutes: bool,
    pub parts_invariant: bool,
    pub delta_flips_parity: bool,
    pub summands_land_in_parts: bool,
    pub closed_formulas_match: bool,
    pub dims_match: bool,
}

impl WedgeSymChecks {
    pub fn all(&self) -> bool {
        self.swap_commutes
            && self.parts_invariant
            && self.delta_flips_parity
            && self.summands_land_in_parts
            && self.closed_formulas_match
            && self.dims_match
    }
}

/// Decomposes the exterior and symmetric squares of `V_m` inside
/// `V_{m,m}` via the swap involution, and checks the odd/even pattern
/// of det-twists.  Requires `2m < char F`.
pub fn cg_wedge_sym_decompose(
    m: usize,
    field: &Field,
    gens: &[Matrix],
) -> Result<CgWedgeSymReport, ConstructError> {
    let p = field.characteristic();
    if (2 * m) as u64 >= p {
        return Err(ConstructError::CharTooSmall { m: 2 * m, p });
    }
    let f = field;
    let d = (m + 1) * (m + 1);
    let target_gens = vmn_gens(m, m, f, gens);

    // Swap involution (i, j) -> (j, i).
    let mut tau = Matrix::zeros(f, d, d);
    for i in 0..=m {
        for j in 0..=m {
            tau.set(i * (m + 1) + j, j * (m + 1) + i, 1);
        }
    }
    let swap_commutes = target_gens.iter().all(|tg| tau.mul(tg) == tg.mul(&tau));

    // Antisymmetric and symmetric parts.
    let mut anti_rows = Vec::new();
    let mut sym_rows = Vec::new();
    for i in 0..=m {
        for j in 0..=m {
            if i < j {
                let mut v = vec![0u64; d];
                v[i * (m + 1) + j] = 1;
                v[j * (m + 1) + i] = f.neg_rep(1);
                anti_rows.push(v);
                let mut w = vec![0u64; d];
                w[i * (m + 1) + j] = 1;
                w[j * (m + 1) + i] = 1;
                sym_rows.push(w);
            } else if i == j {
                let mut w = vec![0u64; d];
                w[i * (m + 1) + j] = 1;
                sym_rows.push(w);
            }
        }
    }
    let anti = Subspace::from_rows(f, d, anti_rows);
    let sym = Subspace::from_rows(f, d, sym_rows);
    let parts_invariant = target_gens.iter().all(|tg| {
        anti.contains_subspace(&anti.apply(tg)) && sym.contains_subspace(&sym.apply(tg))
    }) && anti.dim() == m * (m + 1) / 2
        && sym.dim() == (m + 1) * (m + 2) / 2;

    // Delta embeddings flip the swap parity.
    let mut delta_flips_parity = true;
    if m >= 1 {
        let delta = delta_matrix(m, m, f);
        let inner = wedge_sym_parts(m - 1, f);
        let (inner_anti, inner_sym) = inner;
        let image_of_sym = inner_sym.apply(&delta);
        let image_of_anti = inner_anti.apply(&delta);
        // (S^2 V_{m-1}) delta = wedge^2 V_m (equality by dimension).
        delta_flips_parity &= anti.contains_subspace(&image_of_sym)
            && image_of_sym.dim() == anti.dim();
        // (wedge^2 V_{m-1}) delta + W = S^2 V_m, a direct sum.
        let w_space = Subspace::from_matrix(&w_basis_matrix(m, m, f));
        delta_flips_parity &= sym.contains_subspace(&image_of_anti)
            && sym.contains_subspace(&w_space)
            && image_of_anti.intersect(&w_space).is_zero()
            && image_of_anti.sum(&w_space) == sym;
    }

    // Split the tensor summands by the parity of the det power.
    let tensor = cg_tensor_decompose(m, m, f, gens)?;
    let mut wedge_multiplicities = Vec::new();
    let mut sym_multiplicities = Vec::new();
    let mut summands_land_in_parts = tensor.checks.all(m, m);
    for ((i, k), emb) in tensor.multiplicities.iter().zip(&tensor.summand_embeddings) {
        let image = Subspace::from_matrix(emb);
        if i % 2 == 1 {
            wedge_multiplicities.push((*i, *k));
            summands_land_in_parts &= anti.contains_subspace(&image);
        } else {
            sym_multiplicities.push((*i, *k));
            summands_land_in_parts &= sym.contains_subspace(&image);
        }
    }

    let expected_wedge: Vec<(usize, usize)> =
        (1..=m).filter(|i| i % 2 == 1).map(|i| (i, 2 * m - 2 * i)).collect();
    let expected_sym: Vec<(usize, usize)> =
        (0..=m).filter(|i| i % 2 == 0).map(|i| (i, 2 * m - 2 * i)).collect();
    let closed_formulas_match =
        wedge_multiplicities == expected_wedge && sym_multiplicities == expected_sym;

    let dims_match = wedge_multiplicities.iter().map(|&(_, k)| k + 1).sum::<usize>()
        == m * (m + 1) / 2
        && sym_multiplicities.iter().map(|&(_, k)| k + 1).sum::<usize>()
            == (m + 1) * (m + 2) / 2;

    let checks = WedgeSymChecks {
        swap_commutes,
        parts_invariant,
        delta_flips_parity,
        summands_land_in_parts,
        closed_formulas_match,
        dims_match,
    };
    Ok(CgWedgeSymReport { m, wedge_multiplicities, sym_multiplicities, checks })
}

/// Antisymmetric and symmetric parts of `V_{m,m}`.
fn wedge_sym_parts(m: usize, field: &Field) -> (Subspace, Subspace) {
    let d = (m + 1) * (m + 1);
    let f = field;
    let mut anti_rows = Vec::new();
    let mut sym_rows = Vec::new();
    for i in 0..=m {
        for j in 0..=m {
            if i < j {
                let mut v = vec![0u64; d];
                v[i * (m + 1) + j] = 1;
                v[j * (m + 1) + i] = f.neg_rep(1);
                anti_rows.push(v);
                let mut w = vec![0u64; d];
                w[i * (m + 1) + j] = 1;
                w[j * (m + 1) + i] = 1;
                sym_rows.push(w);
            } else if i == j {
                let mut w = vec![0u64; d];
                w[i * (m + 1) + j] = 1;
                sym_rows.push(w);
            }
        }
    }
    (Subspace::from_rows(f, d, anti_rows), Subspace::from_rows(f, d, sym_rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vm_small_cases() {
        let f = Field::prime(7).unwrap();
        let gens = sl2_generators(&f);
        let v0 = vm_module(0, &f, &gens).unwrap();
        for g in v0.gens() {
            assert_eq!(*g, Matrix::identity(&f, 1));
        }
        // Degree 1 is the natural module in the reversed basis (Y, X):
        // conjugating by the flip recovers the generators themselves.
        let v1 = vm_module(1, &f, &gens).unwrap();
        let flip = Matrix::from_ints(&f, &[&[0, 1], &[1, 0]]);
        for (vg, g) in v1.gens().iter().zip(&gens) {
            assert_eq!(flip.mul(vg).mul(&flip), *g);
        }
    }

    #[test]
    fn v2_action_of_upper_unipotent() {
        // g = [[1,1],[0,1]] over F_7: X^2 -> X^2, XY -> X^2 + XY,
        // Y^2 -> X^2 + 2XY + Y^2.
        let f = Field::prime(7).unwrap();
        let g = Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
        let v2 = vm_matrix(2, &f, &g);
        let expect = Matrix::from_ints(&f, &[&[1, 0, 0], &[1, 1, 0], &[1, 2, 1]]);
        assert_eq!(v2, expect);
    }

    #[test]
    fn vm_is_multiplicative() {
        let f = Field::prime(11).unwrap();
        let a = Matrix::from_ints(&f, &[&[1, 2], &[3, 0]]);
        let b = Matrix::from_ints(&f, &[&[2, 1], &[1, 1]]);
        for m in 0..5 {
            let lhs = vm_matrix(m, &f, &a.mul(&b));
            let rhs = vm_matrix(m, &f, &a).mul(&vm_matrix(m, &f, &b));
            assert_eq!(lhs, rhs, "degree {m}");
        }
    }

    #[test]
    fn tensor_v1_v1() {
        let f = Field::prime(7).unwrap();
        let gens = gl2_generators(&f);
        let report = cg_tensor_decompose(1, 1, &f, &gens).unwrap();
        assert_eq!(report.multiplicities, vec![(0, 2), (1, 0)]);
        assert!(report.checks.all(1, 1), "{:?}", report.checks);
    }

    #[test]
    fn tensor_v2_v2_over_f11() {
        let f = Field::prime(11).unwrap();
        let gens = gl2_generators(&f);
        let report = cg_tensor_decompose(2, 2, &f, &gens).unwrap();
        assert_eq!(report.multiplicities, vec![(0, 4), (1, 2), (2, 0)]);
        assert!(report.checks.all(2, 2), "{:?}", report.checks);
    }

    #[test]
    fn wedge_sym_small() {
        let f = Field::prime(11).unwrap();
        let gens = gl2_generators(&f);
        let r1 = cg_wedge_sym_decompose(1, &f, &gens).unwrap();
        assert_eq!(r1.wedge_multiplicities, vec![(1, 0)]);
        assert_eq!(r1.sym_multiplicities, vec![(0, 2)]);
        assert!(r1.checks.all(), "{:?}", r1.checks);

        let r2 = cg_wedge_sym_decompose(2, &f, &gens).unwrap();
        assert_eq!(r2.wedge_multiplicities, vec![(1, 2)]);
        assert_eq!(r2.sym_multiplicities, vec![(0, 4), (2, 0)]);
        assert!(r2.checks.all(), "{:?}", r2.checks);
    }

    #[test]
    fn wedge_v6_over_f13() {
        let f = Field::prime(13).unwrap();
        let gens = gl2_generators(&f);
        let r = cg_wedge_sym_decompose(6, &f, &gens).unwrap();
        assert_eq!(r.wedge_multiplicities, vec![(1, 10), (3, 6), (5, 2)]);
        // dims 21 = 11 + 7 + 3.
        assert!(r.checks.all(), "{:?}", r.checks);
    }

    #[test]
    fn char_too_small_rejected() {
        let f = Field::prime(7).unwrap();
        let gens = sl2_generators(&f);
        assert!(matches!(
            cg_tensor_decompose(3, 4, &f, &gens).unwrap_err(),
            ConstructError::CharTooSmall { .. }
        ));
        assert!(vm_module(7, &f, &gens).is_err());
    }
}
