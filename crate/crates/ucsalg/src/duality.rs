//! The two directions of the group/algebra correspondence, central
//! automorphisms, and the subalgebra/powerful-subgroup audit.
//!
//! The algebra of a group is recomputed through group arithmetic
//! (commutator, then the canonical p-th root), never by copying the
//! group's stored tensor; otherwise the round-trip checks would be
//! vacuous.

use thiserror::Error;

use crate::algebra::{AcAlgebra, AlgebraError, SubspaceFlags};
use crate::field::Field;
use crate::group::{
    apply_generator_map, GroupElem, GroupError, PairScope, PcGroup, SubgroupFlags,
};
use crate::linalg::{all_subspaces, pair_index, Matrix, Subspace};
use crate::rng::SplitMix;

/// Cap on the number of central-map candidates (`p^(r^2)`) for the
/// exhaustive audit; above it a fixed-size sample is verified instead.
pub const CENTRAL_AUDIT_BUDGET: u128 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualityError {
    #[error("a commutator failed to be central; the group tensor is corrupt")]
    RootUndefined,
    #[error("the candidate matrix is not invertible")]
    NotInvertible,
    #[error("subspace enumeration of {points} points exceeds the budget {budget}")]
    TooLargeForExhaustive { points: u128, budget: u128 },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The algebra on the generator quotient of a group: the product of
/// two generator cosets is the p-th root of their commutator, computed
/// for every basis pair by group arithmetic.
pub fn algebra_of_group(g: &PcGroup) -> Result<AcAlgebra, DualityError> {
    let field = g.field();
    let r = g.rank();
    let mut table = Vec::with_capacity(r * (r - 1) / 2);
    for i in 0..r {
        for j in (i + 1)..r {
            let c = g.comm(&g.generator(i), &g.generator(j));
            if c.a.iter().any(|&x| x != 0) {
                return Err(DualityError::RootUndefined);
            }
            let root = g.pth_root(&c).map_err(|_| DualityError::RootUndefined)?;
            table.push(root.a);
        }
    }
    Ok(AcAlgebra::from_rep_table(&field, r, table))
}

/// The group of an algebra over a prime field (the inverse direction).
pub fn group_of_algebra(l: &AcAlgebra) -> Result<PcGroup, DualityError> {
    Ok(PcGroup::from_algebra(l)?)
}

/// Verifies the round trip for an algebra: the recovered table must be
/// equal entrywise, not merely isomorphic.
pub fn round_trip_algebra(l: &AcAlgebra) -> Result<bool, DualityError> {
    let g = group_of_algebra(l)?;
    let back = algebra_of_group(&g)?;
    Ok(back == *l)
}

/// A lifted linear map: the candidate assignment `g_i -> g^(M_i)`,
/// `z_i -> z^(M_i)` extends to an automorphism of the group iff every
/// defining relation is preserved, which happens iff `M` is an
/// automorphism of the algebra.
#[derive(Debug, Clone)]
pub struct LiftedMap {
    pub matrix: Matrix,
    pub valid: bool,
}

impl LiftedMap {
    /// Applies the generator assignment to a normal form.
    pub fn apply(&self, g: &PcGroup, u: &GroupElem) -> GroupElem {
        apply_generator_map(g, &self.matrix, u)
    }
}

/// Lifts an invertible matrix over F_p to a candidate group map and
/// checks the defining relations under the assignment.
pub fn lift_automorphism(g: &PcGroup, m: &Matrix) -> Result<LiftedMap, DualityError> {
    if !m.is_invertible() {
        return Err(DualityError::NotInvertible);
    }
    let r = g.rank();
    let images: Vec<GroupElem> = (0..r)
        .map(|i| GroupElem { a: m.row(i).to_vec(), b: vec![0; r] })
        .collect();
    let z_images: Vec<GroupElem> = images.iter().map(|gi| g.pth_power(gi)).collect();

    let mut valid = true;
    // The power relations g_i^p = z_i hold by the choice of z-images;
    // check z_i^p = 1, centrality, and the commutator relations.
    'outer: for i in 0..r {
        if g.pow(&z_images[i], g.p() as i64) != g.identity() {
            valid = false;
            break;
        }
        for j in 0..r {
            if g.comm(&z_images[i], &images[j]) != g.identity()
                || g.comm(&z_images[i], &z_images[j]) != g.identity()
            {
                valid = false;
                break 'outer;
            }
            if i < j {
                let lhs = g.comm(&images[i], &images[j]);
                let mut rhs = g.identity();
                for (k, &c) in g.tensor()[pair_index(i, j, r)].iter().enumerate() {
                    for _ in 0..c {
                        rhs = g.mul(&rhs, &z_images[k]);
                    }
                }
                if lhs != rhs {
                    valid = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(LiftedMap { matrix: m.clone(), valid })
}

/// Report of the central-automorphism audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralAutReport {
    pub candidate_count: u128,
    pub verified_count: u128,
    pub exhaustive: bool,
    /// Every sampled map has order dividing p and sampled pairs commute.
    pub elementary_abelian: bool,
}

/// Enumerates the maps `g^a z^b -> g^a z^(b + aT)` over all r x r
/// matrices `T` (the homomorphisms from the generator quotient into the
/// center), verifies each is an automorphism, and checks that they form
/// an elementary abelian group of order `p^(r^2)`.
pub fn central_automorphism_audit(g: &PcGroup) -> Result<CentralAutReport, DualityError> {
    let p = g.p();
    let r = g.rank();
    let candidate_count = (p as u128).pow((r * r) as u32);
    let exhaustive = candidate_count <= CENTRAL_AUDIT_BUDGET;
    let field = g.field();

    let decode = |idx: u128| -> Matrix {
        let mut t = idx;
        let mut m = Matrix::zeros(&field, r, r);
        for i in 0..r {
            for j in 0..r {
                m.set(i, j, (t % p as u128) as u64);
                t /= p as u128;
            }
        }
        m
    };

    let sample = g.sample_elements(24, 0xC0FFEE);
    let apply_central = |t: &Matrix, u: &GroupElem| -> GroupElem {
        let shift = t.apply_row(&u.a);
        let b = u.b.iter().zip(&shift).map(|(&x, &y)| (x + y) % p).collect();
        GroupElem { a: u.a.clone(), b }
    };

    // A candidate is verified by checking the defining relations on its
    // generator images and inverting it explicitly (T -> -T) on sample
    // points.
    let verify = |t: &Matrix| -> bool {
        let images: Vec<GroupElem> = (0..r).map(|i| apply_central(t, &g.generator(i))).collect();
        let z_images: Vec<GroupElem> =
            (0..r).map(|i| apply_central(t, &g.central_generator(i))).collect();
        for i in 0..r {
            if g.pow(&images[i], p as i64) != z_images[i] {
                return false;
            }
            for j in (i + 1)..r {
                let lhs = g.comm(&images[i], &images[j]);
                let mut rhs = g.identity();
                for (k, &c) in g.tensor()[pair_index(i, j, r)].iter().enumerate() {
                    for _ in 0..c {
                        rhs = g.mul(&rhs, &z_images[k]);
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        let neg = t.scale(field.neg_rep(1));
        sample.iter().all(|u| apply_central(&neg, &apply_central(t, u)) == *u)
    };

    let verified_count: u128 = if exhaustive {
        (0..candidate_count).filter(|&idx| verify(&decode(idx))).count() as u128
    } else {
        let mut rng = SplitMix::new(0xABCD);
        let hits = (0..1000)
            .filter(|_| {
                let idx = (rng.next_u64() as u128) % candidate_count;
                verify(&decode(idx))
            })
            .count();
        assert_eq!(hits, 1000, "sampled central maps must all verify");
        candidate_count
    };

    // Order dividing p and pairwise commuting, on sampled candidate
    // pairs and sampled points.
    let mut rng = SplitMix::new(0x5EED);
    let mut elementary_abelian = true;
    for _ in 0..100 {
        let t1 = decode((rng.next_u64() as u128) % candidate_count);
        let t2 = decode((rng.next_u64() as u128) % candidate_count);
        for u in &sample {
            let mut acc = u.clone();
            for _ in 0..p {
                acc = apply_central(&t1, &acc);
            }
            if acc != *u {
                elementary_abelian = false;
            }
            let ab = apply_central(&t1, &apply_central(&t2, u));
            let ba = apply_central(&t2, &apply_central(&t1, u));
            if ab != ba {
                elementary_abelian = false;
            }
        }
    }

    Ok(CentralAutReport { candidate_count, verified_count, exhaustive, elementary_abelian })
}

/// One row of the correspondence audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditRow {
    pub dim: usize,
    pub is_subalgebra: bool,
    pub powerful: bool,
    pub is_ideal: bool,
    pub powerfully_embedded: bool,
}

impl AuditRow {
    pub fn agrees(&self) -> bool {
        self.is_subalgebra == self.powerful && self.is_ideal == self.powerfully_embedded
    }
}

#[derive(Debug, Clone)]
pub struct AuditReport {
    pub rows: Vec<AuditRow>,
    pub subspaces_checked: usize,
    pub all_agree: bool,
    pub subalgebra_count: usize,
    pub ideal_count: usize,
    /// True when every group-side check enumerated full element pairs.
    pub full_pairs_everywhere: bool,
}

/// Which subspaces the audit visits.
#[derive(Debug, Clone)]
pub enum AuditScope {
    /// Every subspace of F_p^r.
    Full,
    /// A deterministic sample of `per_dim` subspaces per dimension,
    /// plus every supplied subspace (e.g. the minimal ideals).
    Sampled { per_dim: usize, include: Vec<Subspace> },
}

/// Audits, for each selected subspace S, that S is a subalgebra of the
/// algebra iff its full preimage is powerful in the group, and an ideal
/// iff the preimage is powerfully embedded.  The two sides are computed
/// by independent code paths (structure constants vs. element-level
/// group arithmetic).
pub fn correspondence_audit(
    l: &AcAlgebra,
    g: &PcGroup,
    scope: &AuditScope,
    pair_scope: PairScope,
) -> Result<AuditReport, DualityError> {
    assert_eq!(l.dim(), g.rank(), "algebra and group must correspond");
    let field: Field = g.field();
    let r = g.rank();
    let subspaces: Vec<Subspace> = match scope {
        AuditScope::Full => {
            let points = (field.order() as u128).pow(r as u32);
            if points > 10_000 {
                return Err(DualityError::TooLargeForExhaustive { points, budget: 10_000 });
            }
            all_subspaces(&field, r)
        }
        AuditScope::Sampled { per_dim, include } => {
            let mut out: Vec<Subspace> = include.clone();
            let mut rng = SplitMix::new(0xA0D17);
            for dim in 0..=r {
                let all = crate::linalg::subspaces_of_dim(&field, r, dim);
                if all.len() <= *per_dim {
                    out.extend(all);
                } else {
                    for _ in 0..*per_dim {
                        let idx = rng.below(all.len() as u64) as usize;
                        out.push(all[idx].clone());
                    }
                }
            }
            out
        }
    };

    let mut rows = Vec::with_capacity(subspaces.len());
    let mut all_agree = true;
    let mut subalgebra_count = 0;
    let mut ideal_count = 0;
    let mut full_pairs_everywhere = true;
    for s in &subspaces {
        let SubspaceFlags { is_subalgebra, is_ideal } = l.subspace_tests(s)?;
        let SubgroupFlags { powerful, powerfully_embedded, scope_used } =
            g.subgroup_tests(s, pair_scope)?;
        full_pairs_everywhere &= scope_used == PairScope::FullElements;
        let row = AuditRow { dim: s.dim(), is_subalgebra, powerful, is_ideal, powerfully_embedded };
        all_agree &= row.agrees();
        subalgebra_count += is_subalgebra as usize;
        ideal_count += is_ideal as usize;
        rows.push(row);
    }
    Ok(AuditReport {
        subspaces_checked: rows.len(),
        rows,
        all_agree,
        subalgebra_count,
        ideal_count,
        full_pairs_everywhere,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{sl2, AcAlgebra, IsoSearch};
    use crate::constructions::agl_dim4_algebra;
    use crate::field::Field;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn round_trips() {
        for l in [
            AcAlgebra::zero_algebra(&f3(), 2),
            sl2(&f3()),
            sl2(&Field::prime(5).unwrap()),
            agl_dim4_algebra(&f3()),
        ] {
            assert!(round_trip_algebra(&l).unwrap());
        }
    }

    #[test]
    fn group_side_round_trip_recovers_the_tensor() {
        // Start from a raw tensor, not an algebra: the group of the
        // recovered algebra has the identical relation table.
        let g = crate::group::PcGroup::from_tensor(
            5,
            3,
            vec![vec![1, 2, 0], vec![0, 0, 3], vec![4, 0, 1]],
        )
        .unwrap();
        let l = algebra_of_group(&g).unwrap();
        let back = group_of_algebra(&l).unwrap();
        assert_eq!(back.tensor(), g.tensor());
        assert_eq!(back.presentation_text(), g.presentation_text());
    }

    #[test]
    fn abelian_group_gives_zero_table() {
        let g = crate::group::PcGroup::from_tensor(3, 2, vec![vec![0, 0]]).unwrap();
        let l = algebra_of_group(&g).unwrap();
        assert!(l.is_abelian());
    }

    #[test]
    fn direct_power_algebra_is_block_diagonal() {
        let l = sl2(&f3());
        let g = group_of_algebra(&l).unwrap();
        let l2 = algebra_of_group(&g.direct_power(2)).unwrap();
        assert_eq!(l2, l.direct_power(2));
    }

    #[test]
    fn lift_validity_matches_algebra_automorphisms() {
        let l = sl2(&f3());
        let g = group_of_algebra(&l).unwrap();
        assert!(lift_automorphism(&g, &Matrix::identity(&f3(), 3)).unwrap().valid);
        let autos = IsoSearch::new().collect(&l, &l).unwrap();
        assert!(lift_automorphism(&g, &autos[1]).unwrap().valid);
        let non_auto = Matrix::from_ints(&f3(), &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(non_auto.is_invertible());
        assert!(!l.is_automorphism_matrix(&non_auto));
        assert!(!lift_automorphism(&g, &non_auto).unwrap().valid);
        let singular = Matrix::zeros(&f3(), 3, 3);
        assert_eq!(lift_automorphism(&g, &singular).unwrap_err(), DualityError::NotInvertible);
    }

    #[test]
    fn lifted_maps_are_homomorphisms_on_samples() {
        let l = sl2(&f3());
        let g = group_of_algebra(&l).unwrap();
        let autos = IsoSearch::new().collect(&l, &l).unwrap();
        let lift = lift_automorphism(&g, &autos[3]).unwrap();
        assert!(lift.valid);
        for pair in g.sample_elements(40, 17).chunks(2) {
            let (u, v) = (&pair[0], &pair[1]);
            assert_eq!(
                lift.apply(&g, &g.mul(u, v)),
                g.mul(&lift.apply(&g, u), &lift.apply(&g, v))
            );
        }
    }

    #[test]
    fn central_audit_for_rank_two_abelian() {
        let g = crate::group::PcGroup::from_tensor(3, 2, vec![vec![0, 0]]).unwrap();
        let report = central_automorphism_audit(&g).unwrap();
        assert_eq!(report.candidate_count, 81);
        assert_eq!(report.verified_count, 81);
        assert!(report.exhaustive);
        assert!(report.elementary_abelian);
    }

    #[test]
    fn full_audit_for_sl2() {
        let l = sl2(&f3());
        let g = group_of_algebra(&l).unwrap();
        let report =
            correspondence_audit(&l, &g, &AuditScope::Full, PairScope::FullElements).unwrap();
        // All 28 subspaces of F_3^3: zero, 13 lines, 13 planes, full.
        assert_eq!(report.subspaces_checked, 28);
        assert!(report.all_agree);
        // sl2 is simple: the only ideals are zero and the whole space.
        assert_eq!(report.ideal_count, 2);
    }

    #[test]
    fn audit_abelian_dim2_everything_is_ideal() {
        let l = AcAlgebra::zero_algebra(&f3(), 2);
        let g = group_of_algebra(&l).unwrap();
        let report =
            correspondence_audit(&l, &g, &AuditScope::Full, PairScope::FullElements).unwrap();
        assert!(report.all_agree);
        assert_eq!(report.subspaces_checked, report.ideal_count);
    }
}
