//! The census of 4-dimensional simple algebras over small fields.
//!
//! Candidates are all surjective intertwiners `psi` from the exterior
//! square of the relevant deleted permutation module back onto it: the
//! 5-cycle module when `q = +/-2 mod 5` (where the cycle alone is
//! irreducible), the full AGL(1,5) module when `q = +/-1 mod 5`.
//!
//! Partitioning into isomorphism classes proceeds in three stages, each
//! of which only ever merges candidates with an explicit isomorphism
//! witness:
//!
//! 1. scalar scaling: `lambda psi` and `psi` give isomorphic algebras
//!    (the map `x -> lambda x`), so candidates are reduced to lines;
//! 2. transport: for any invertible `e` that commutes with the acting
//!    group (an endomorphism-field element) or normalizes it (the
//!    multiplication permutation), `wedge(e) psi e^{-1}` is again a
//!    candidate and `x -> x e` is an isomorphism of the two algebras;
//!    orbits under these moves are merged with a union-find;
//! 3. the surviving orbit representatives are compared by the full
//!    backtracking isomorphism search, which also certifies that the
//!    final classes are pairwise non-isomorphic.

use std::collections::BTreeMap;

use super::esq::esq_structures;
use super::perm::{agl_generators, deleted_perm_module};
use super::ConstructError;
use crate::algebra::{AcAlgebra, IsoSearch};
use crate::field::Field;
use crate::linalg::{hom_module_space, Matrix, ModuleRep};

#[derive(Clone, Debug)]
pub struct CensusClass {
    pub representative: AcAlgebra,
    pub rep_psi: Matrix,
    pub aut_order: u64,
    /// Number of surjective intertwiners whose algebra lies in this
    /// class.
    pub orbit_size: u64,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub q: u64,
    pub classes: Vec<CensusClass>,
    pub total_surjective: u64,
    pub hom_dim: usize,
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

struct LineSet {
    /// Canonical (first-nonzero-entry-1) psi data, in insertion order.
    keys: Vec<Vec<u64>>,
    index: BTreeMap<Vec<u64>, usize>,
    /// Number of surjective psi per line.
    counts: Vec<u64>,
    parent: Vec<usize>,
}

impl LineSet {
    fn canonical(field: &Field, psi: &Matrix) -> Vec<u64> {
        let lead = psi
            .data()
            .iter()
            .copied()
            .find(|&c| c != 0)
            .expect("candidate intertwiners are nonzero");
        psi.scale(field.inv_rep(lead).expect("nonzero")).data().to_vec()
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

/// Builds the census module for a given field size.
fn census_module(q: u64, field: &Field) -> Result<ModuleRep, ConstructError> {
    let gens = agl_generators(5, false)?;
    match q % 5 {
        2 | 3 => deleted_perm_module(&gens[..1], field),
        1 | 4 => deleted_perm_module(&gens, field),
        _ => Err(ConstructError::UnsupportedQ(q)),
    }
}

/// Enumerates, classifies and counts the 4-dimensional algebras arising
/// from the census module over `F_q`.
pub fn dim4_census(q: u64) -> Result<CensusReport, ConstructError> {
    let (p, k) = factor_prime_power(q).ok_or(ConstructError::UnsupportedQ(q))?;
    if p == 2 || p == 5 || q > 13 {
        return Err(ConstructError::UnsupportedQ(q));
    }
    let field = Field::new(p, k, None)?;
    let module = census_module(q, &field)?;
    let structures = esq_structures(&module)?;
    let total_surjective = structures.len() as u64;
    let hom_dim = super::esq::esq_hom_dim(&module)?;

    // Stage 1: scalar lines.
    let mut lines = LineSet {
        keys: Vec::new(),
        index: BTreeMap::new(),
        counts: Vec::new(),
        parent: Vec::new(),
    };
    let psi_rows = module.dim() * (module.dim() - 1) / 2;
    for s in &structures {
        let key = LineSet::canonical(&field, &s.psi);
        if let Some(&i) = lines.index.get(&key) {
            lines.counts[i] += 1;
        } else {
            let i = lines.keys.len();
            lines.index.insert(key.clone(), i);
            lines.keys.push(key);
            lines.counts.push(1);
            lines.parent.push(i);
        }
    }

    // Stage 2: transport moves.
    let mut transports: Vec<Matrix> = Vec::new();
    let endos = hom_module_space(module.gens(), module.gens())?;
    if endos.len() > 1 {
        transports.push(primitive_endomorphism(&field, &endos));
    }
    if matches!(q % 5, 2 | 3) {
        // The multiplication-by-2 permutation normalizes the 5-cycle.
        let agl = deleted_perm_module(&agl_generators(5, false)?, &field)?;
        transports.push(agl.gens()[1].clone());
    }
    for e in &transports {
        let einv = e.inverse().expect("transports are invertible");
        let ewedge = e.wedge_square()?;
        for i in 0..lines.keys.len() {
            let psi = Matrix::from_reps(&field, psi_rows, module.dim(), lines.keys[i].clone());
            let moved = ewedge.mul(&psi).mul(&einv);
            let key = LineSet::canonical(&field, &moved);
            let j = *lines.index.get(&key).expect("transports permute the candidate set");
            lines.union(i, j);
        }
    }

    // Collect orbits (representative = lex-least key in the orbit).
    let mut orbit_of: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..lines.keys.len() {
        let root = lines.find(i);
        orbit_of.entry(root).or_default().push(i);
    }
    let mut orbits: Vec<(Vec<u64>, u64)> = orbit_of
        .values()
        .map(|members| {
            let key = members.iter().map(|&i| lines.keys[i].clone()).min().expect("nonempty");
            let count = members.iter().map(|&i| lines.counts[i]).sum();
            (key, count)
        })
        .collect();
    orbits.sort();

    // Stage 3: cross-orbit isomorphism search.
    let mut classes: Vec<(AcAlgebra, Matrix, u64)> = Vec::new();
    let search = IsoSearch::new();
    for (key, count) in orbits {
        let psi = Matrix::from_reps(&field, psi_rows, module.dim(), key);
        let algebra = super::esq::EsqStructure::from_psi(&field, module.dim(), &psi).algebra;
        let mut merged = false;
        for class in classes.iter_mut() {
            if search.find(&class.0, &algebra)?.is_some() {
                class.2 += count;
                merged = true;
                break;
            }
        }
        if !merged {
            classes.push((algebra, psi, count));
        }
    }

    let mut out: Vec<CensusClass> = classes
        .into_iter()
        .map(|(algebra, rep_psi, orbit_size)| {
            let aut_order = search.count(&algebra, &algebra)?;
            Ok(CensusClass { representative: algebra, rep_psi, aut_order, orbit_size })
        })
        .collect::<Result<_, ConstructError>>()?;
    out.sort_by(|a, b| {
        b.aut_order
            .cmp(&a.aut_order)
            .then_with(|| a.representative.table().cmp(b.representative.table()))
    });
    assert_eq!(
        out.iter().map(|c| c.orbit_size).sum::<u64>(),
        total_surjective,
        "classes must partition the candidates"
    );
    Ok(CensusReport { q, classes: out, total_surjective, hom_dim })
}

/// A generator of the (cyclic) multiplicative group of the
/// endomorphism field, found by deterministic scan.
fn primitive_endomorphism(field: &Field, endos: &[Matrix]) -> Matrix {
    let e = endos.len() as u32;
    let group_order = (field.order() as u128).pow(e) as u64 - 1;
    let q = field.order();
    let total = (q as u128).pow(e) as u64;
    for idx in 1..total {
        let mut cand = Matrix::zeros(field, endos[0].rows(), endos[0].cols());
        let mut t = idx;
        for b in endos {
            let c = t % q;
            t /= q;
            if c != 0 {
                cand = cand.add(&b.scale(c));
            }
        }
        if !cand.is_invertible() {
            continue;
        }
        if cand.order_dividing(group_order) == Some(group_order) {
            return cand;
        }
    }
    unreachable!("the endomorphism algebra of an irreducible module is a field")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::agl_dim4_algebra;

    #[test]
    fn census_q3_has_two_classes() {
        let report = dim4_census(3).unwrap();
        assert_eq!(report.total_surjective, 80);
        assert_eq!(report.hom_dim, 4);
        assert_eq!(report.classes.len(), 2);
        let auts: Vec<u64> = report.classes.iter().map(|c| c.aut_order).collect();
        assert_eq!(auts, vec![20, 5]);
        // One class is the AGL(1,5)-symmetric table.
        let f = Field::prime(3).unwrap();
        let target = agl_dim4_algebra(&f);
        let matches: Vec<bool> = report
            .classes
            .iter()
            .map(|c| IsoSearch::new().find(&c.representative, &target).unwrap().is_some())
            .collect();
        assert_eq!(matches, vec![true, false]);
    }

    #[test]
    fn census_q11_is_unique() {
        let report = dim4_census(11).unwrap();
        assert_eq!(report.classes.len(), 1);
        assert_eq!(report.hom_dim, 1);
        assert_eq!(report.total_surjective, 10);
        assert_eq!(report.classes[0].aut_order, 20);
    }

    #[test]
    fn census_q9_is_unique() {
        let report = dim4_census(9).unwrap();
        assert_eq!(report.classes.len(), 1);
        assert_eq!(report.classes[0].aut_order, 20);
    }

    #[test]
    fn census_rejects_multiples_of_5_and_large_q() {
        assert!(matches!(dim4_census(5).unwrap_err(), ConstructError::UnsupportedQ(5)));
        assert!(matches!(dim4_census(25).unwrap_err(), ConstructError::UnsupportedQ(25)));
        assert!(matches!(dim4_census(17).unwrap_err(), ConstructError::UnsupportedQ(17)));
    }
}
