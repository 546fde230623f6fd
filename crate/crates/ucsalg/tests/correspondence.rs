//! Cross-module checks of the group/algebra correspondence that go
//! beyond the per-module unit tests: the wreath-product automorphism
//! count of a direct sum, lift validity over the whole of GL(3,3), the
//! sampled audit of the six-dimensional double, and edge cases of the
//! exterior-self-quotient machinery.

use ucsalg::algebra::{sl2, IsoSearch};
use ucsalg::constructions::{
    agl_dim4_algebra, dim4_census, esq_structures, sl2_generators, vm_module,
};
use ucsalg::duality::{correspondence_audit, group_of_algebra, lift_automorphism, AuditScope};
use ucsalg::field::Field;
use ucsalg::group::PairScope;
use ucsalg::linalg::{all_vectors, hom_module_space, subspaces_of_dim, Matrix, Subspace};

fn f3() -> Field {
    Field::prime(3).unwrap()
}

#[test]
fn aut_of_direct_sum_is_wreath_sized() {
    // Two isomorphic non-abelian simple summands: the automorphism
    // group is the wreath product, of order |Aut(L_0)|^2 * 2.
    let double = sl2(&f3()).direct_power(2);
    let count = IsoSearch::new().count(&double, &double).unwrap();
    assert_eq!(count, 24 * 24 * 2);
}

#[test]
fn lift_validity_equals_algebra_automorphism_on_all_of_gl33() {
    let l = sl2(&f3());
    let g = group_of_algebra(&l).unwrap();
    let f = f3();
    let mut invertible = 0;
    let mut valid = 0;
    for data in all_vectors(&f, 9) {
        let m = Matrix::from_reps(&f, 3, 3, data);
        if !m.is_invertible() {
            continue;
        }
        invertible += 1;
        let lift = lift_automorphism(&g, &m).unwrap();
        assert_eq!(lift.valid, l.is_automorphism_matrix(&m));
        valid += lift.valid as usize;
    }
    assert_eq!(invertible, 11232);
    assert_eq!(valid, 24);
}

#[test]
fn double_sl2_has_exactly_two_proper_ideals_and_the_audit_agrees() {
    let double = sl2(&f3()).direct_power(2);
    let g = group_of_algebra(&double).unwrap();

    // Exhaustive algebra-side ideal census over the full subspace
    // lattice of F_3^6 (about 5.7e4 subspaces).
    let f = f3();
    let mut ideal_dims = Vec::new();
    for dim in 0..=6 {
        for s in subspaces_of_dim(&f, 6, dim) {
            if double.subspace_tests(&s).unwrap().is_ideal {
                ideal_dims.push(dim);
            }
        }
    }
    ideal_dims.sort();
    assert_eq!(ideal_dims, vec![0, 3, 3, 6], "ideals: 0, the two summands, L");

    // Group-side correspondence on the minimal ideals plus a sampled
    // sublattice.  Full element-pair enumeration is beyond the pair
    // budget at rank 6, so the group side drops to subgroup-generator
    // level there (sound in class 2).
    let ideals = double.semisimple_decompose().unwrap().ideals().to_vec();
    assert_eq!(ideals.len(), 2);
    let scope = AuditScope::Sampled { per_dim: 4, include: ideals.clone() };
    let report = correspondence_audit(&double, &g, &scope, PairScope::Auto).unwrap();
    assert!(report.all_agree);
    // The two included minimal ideals are the first rows.
    for row in &report.rows[..2] {
        assert_eq!(row.dim, 3);
        assert!(row.is_ideal && row.powerfully_embedded);
    }
}

#[test]
fn ideal_preimages_are_powerfully_embedded_with_full_pairs_at_rank_three() {
    // The same statement at a size where the honest full-pair oracle
    // runs: inside the 729-element group of sl2(F_3) + a central line.
    // The direct sum with a 1-dimensional abelian algebra has the
    // summands as ideals.
    let l = sl2(&f3());
    let ideal = Subspace::from_rows(&f3(), 3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    let g = group_of_algebra(&l).unwrap();
    let flags = g.subgroup_tests(&ideal, PairScope::FullElements).unwrap();
    assert!(flags.powerful && flags.powerfully_embedded);
}

#[test]
fn census_representative_over_f9_matches_the_integer_table() {
    let report = dim4_census(9).unwrap();
    assert_eq!(report.classes.len(), 1);
    let f9 = Field::new(3, 2, None).unwrap();
    let target = agl_dim4_algebra(&f9);
    assert!(IsoSearch::new()
        .find(&report.classes[0].representative, &target)
        .unwrap()
        .is_some());
}

#[test]
fn census_representatives_contain_the_integer_table_class() {
    // At q = 2 or 3 mod 5 the candidates come from the bare 5-cycle
    // module, yet exactly one of the two classes must be the algebra
    // with full AGL(1,5) symmetry.
    for q in [7u64, 13] {
        let report = dim4_census(q).unwrap();
        assert_eq!(report.classes.len(), 2);
        let f = Field::prime(q).unwrap();
        let target = agl_dim4_algebra(&f);
        let matches: Vec<bool> = report
            .classes
            .iter()
            .map(|c| IsoSearch::new().find(&c.representative, &target).unwrap().is_some())
            .collect();
        assert_eq!(matches.iter().filter(|&&b| b).count(), 1);
        // The matching class is the one with the larger automorphism
        // group.
        let idx = matches.iter().position(|&b| b).unwrap();
        assert_eq!(report.classes[idx].aut_order, 20);
    }
}

#[test]
fn no_intertwiners_onto_the_trivial_module() {
    // V_m for m >= 1 has no trivial constituent under SL(2,p).
    let f = Field::prime(7).unwrap();
    let gens = sl2_generators(&f);
    for m in 1..=3 {
        let vm = vm_module(m, &f, &gens).unwrap();
        let trivial = vec![Matrix::identity(&f, 1), Matrix::identity(&f, 1)];
        assert!(hom_module_space(vm.gens(), &trivial).unwrap().is_empty());
    }
}

#[test]
fn degree_four_module_has_no_esq_structure() {
    // 4 is not 2 mod 4, so the intertwiner space from the exterior
    // square is empty and no quotient structure exists.
    let f = Field::prime(13).unwrap();
    let v4 = vm_module(4, &f, &sl2_generators(&f)).unwrap();
    assert!(esq_structures(&v4).unwrap().is_empty());
}

#[test]
fn group_invariants_match_across_the_duality() {
    // The group of the AGL(1,5)-symmetric algebra over F_3 has order
    // 3^8 with derived = Frattini = center of order 3^4.
    let l = agl_dim4_algebra(&f3());
    let g = group_of_algebra(&l).unwrap();
    let inv = g.invariants().unwrap();
    assert_eq!(inv.order, 6561);
    assert_eq!(inv.center_order, 81);
    assert_eq!(inv.exponent, 9);
    assert!(inv.coincide_and_elementary);
}
