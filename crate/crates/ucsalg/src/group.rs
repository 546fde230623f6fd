//! Finite p-groups of exponent p^2 presented on generators
//! `g_1..g_r, z_1..z_r` with relations `g_i^p = z_i`, `z_i^p = 1`,
//! `[z_i, g_j] = [z_i, z_j] = 1` and `[g_i, g_j] = prod_k z_k^(c_k)`
//! for `i < j`.
//!
//! Elements are normal forms `g^a z^b` with exponent vectors reduced
//! mod p; multiplication is closed-form class-2 collection.  Moving
//! `g_i^(a'_i)` leftward past `g_j^(a_j)` (j > i) inserts
//! `[g_j, g_i]^(a_j a'_i) = prod_k z_k^(-a_j a'_i c_k)`, and overflow
//! in a `g_i` exponent inserts `z_i`.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::algebra::AcAlgebra;
use crate::field::Field;
use crate::linalg::{pair_index, Matrix, Subspace};
use crate::rng::SplitMix;

/// Cap on |G| for the exhaustive predicates (exponent scan, center
/// scan, subgroup audits).
pub const GROUP_SCAN_BUDGET: u128 = 10_000_000;

/// Cap on element-pair iterations in the subgroup audits.
pub const PAIR_BUDGET: u128 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("the algebra must be over a prime field")]
    NotPrimeField,
    #[error("p = 2 is not supported")]
    EvenPrime,
    #[error("order {order} exceeds the exhaustive budget {budget}")]
    TooLargeForExhaustive { order: u128, budget: u128 },
    #[error("p-th roots exist only for central elements")]
    NotCentral,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Group element in normal form
/// `g_1^{a_1}...g_r^{a_r} z_1^{b_1}...z_r^{b_r}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElem {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
}

impl fmt::Debug for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g^{:?} z^{:?}", self.a, self.b)
    }
}

/// The group of order `p^(2r)` attached to an `r`-dimensional
/// structure-constant table over `F_p`.
#[derive(Clone, PartialEq, Eq)]
pub struct PcGroup {
    p: u64,
    r: usize,
    /// `tensor[pair_index(i, j, r)]` = the exponents of `[g_i, g_j]`
    /// on `z_1..z_r`.
    tensor: Vec<Vec<u64>>,
}

impl fmt::Debug for PcGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PcGroup(p = {}, r = {}, order {})", self.p, self.r, self.order())
    }
}

impl PcGroup {
    /// Builds the group of a structure-constant algebra over a prime
    /// field and audits every defining relation.
    pub fn from_algebra(l: &AcAlgebra) -> Result<PcGroup, GroupError> {
        if !l.field().is_prime_field() {
            return Err(GroupError::NotPrimeField);
        }
        let p = l.field().characteristic();
        if p == 2 {
            return Err(GroupError::EvenPrime);
        }
        let g = PcGroup { p, r: l.dim(), tensor: l.table().to_vec() };
        g.audit_relations();
        Ok(g)
    }

    /// Builds a group directly from a tensor (entries already reduced
    /// mod p).
    pub fn from_tensor(p: u64, r: usize, tensor: Vec<Vec<u64>>) -> Result<PcGroup, GroupError> {
        if p == 2 {
            return Err(GroupError::EvenPrime);
        }
        assert_eq!(tensor.len(), r * (r - 1) / 2);
        for c in &tensor {
            assert_eq!(c.len(), r);
            assert!(c.iter().all(|&x| x < p));
        }
        let g = PcGroup { p, r, tensor };
        g.audit_relations();
        Ok(g)
    }

    /// Verifies the presentation relations hold for the collection law.
    fn audit_relations(&self) {
        let e = self.identity();
        for i in 0..self.r {
            // g_i^p = z_i by repeated multiplication.
            let mut acc = e.clone();
            for _ in 0..self.p {
                acc = self.mul(&acc, &self.generator(i));
            }
            assert_eq!(acc, self.central_generator(i), "g_i^p = z_i fails");
            // z_i^p = 1.
            let mut acc = e.clone();
            for _ in 0..self.p {
                acc = self.mul(&acc, &self.central_generator(i));
            }
            assert_eq!(acc, e, "z_i^p = 1 fails");
            for j in 0..self.r {
                assert_eq!(
                    self.comm(&self.central_generator(i), &self.generator(j)),
                    e,
                    "[z_i, g_j] = 1 fails"
                );
                assert_eq!(
                    self.comm(&self.central_generator(i), &self.central_generator(j)),
                    e,
                    "central generators must commute"
                );
                if i < j {
                    let mut expect = e.clone();
                    for (k, &c) in self.tensor[pair_index(i, j, self.r)].iter().enumerate() {
                        for _ in 0..c {
                            expect = self.mul(&expect, &self.central_generator(k));
                        }
                    }
                    assert_eq!(
                        self.comm(&self.generator(i), &self.generator(j)),
                        expect,
                        "[g_i, g_j] must match the tensor"
                    );
                }
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn tensor(&self) -> &[Vec<u64>] {
        &self.tensor
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(2 * self.r as u32)
    }

    pub fn field(&self) -> Field {
        Field::prime(self.p).expect("p was validated at construction")
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem { a: vec![0; self.r], b: vec![0; self.r] }
    }

    pub fn generator(&self, i: usize) -> GroupElem {
        let mut e = self.identity();
        e.a[i] = 1;
        e
    }

    pub fn central_generator(&self, i: usize) -> GroupElem {
        let mut e = self.identity();
        e.b[i] = 1;
        e
    }

    pub fn element(&self, a: &[u64], b: &[u64]) -> GroupElem {
        assert_eq!(a.len(), self.r);
        assert_eq!(b.len(), self.r);
        GroupElem {
            a: a.iter().map(|&x| x % self.p).collect(),
            b: b.iter().map(|&x| x % self.p).collect(),
        }
    }

    /// The correction exponents picked up when collecting
    /// `g^a g^{a'}`: `delta_k = sum_{i<j} a_j a'_i c_k^(i,j)`.
    fn collection_delta(&self, a: &[u64], a2: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut delta = vec![0u64; self.r];
        for i in 0..self.r {
            if a2[i] == 0 {
                continue;
            }
            for j in (i + 1)..self.r {
                if a[j] == 0 {
                    continue;
                }
                let coeff = a[j] * a2[i] % p;
                let c = &self.tensor[pair_index(i, j, self.r)];
                for k in 0..self.r {
                    delta[k] = (delta[k] + coeff * c[k]) % p;
                }
            }
        }
        delta
    }

    pub fn mul(&self, u: &GroupElem, v: &GroupElem) -> GroupElem {
        let p = self.p;
        let delta = self.collection_delta(&u.a, &v.a);
        let mut a = vec![0u64; self.r];
        let mut b = vec![0u64; self.r];
        for k in 0..self.r {
            let s = u.a[k] + v.a[k];
            a[k] = s % p;
            let carry = s / p;
            b[k] = (u.b[k] + v.b[k] + carry + p - delta[k]) % p;
        }
        GroupElem { a, b }
    }

    pub fn inv(&self, u: &GroupElem) -> GroupElem {
        let p = self.p;
        let a: Vec<u64> = u.a.iter().map(|&x| (p - x) % p).collect();
        // Solve (a, b)(a2, b2) = identity for b2.
        let delta = self.collection_delta(&u.a, &a);
        let mut b = vec![0u64; self.r];
        for k in 0..self.r {
            let carry = (u.a[k] + a[k]) / p;
            b[k] = (2 * p - u.b[k] - carry + delta[k]) % p;
        }
        GroupElem { a, b }
    }

    pub fn pow(&self, u: &GroupElem, n: i64) -> GroupElem {
        let base = if n < 0 { self.inv(u) } else { u.clone() };
        let mut acc = self.identity();
        for _ in 0..n.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        acc
    }

    /// `[u, v] = u^-1 v^-1 u v`, computed by collection.
    pub fn comm(&self, u: &GroupElem, v: &GroupElem) -> GroupElem {
        let ui = self.inv(u);
        let vi = self.inv(v);
        self.mul(&self.mul(&self.mul(&ui, &vi), u), v)
    }

    /// Order of an element by repeated multiplication.
    pub fn element_order(&self, u: &GroupElem) -> u64 {
        let e = self.identity();
        let mut acc = u.clone();
        let mut n = 1;
        while acc != e {
            acc = self.mul(&acc, u);
            n += 1;
        }
        n
    }

    /// The p-th power in closed form: `(g^a z^b)^p = z^a` (class 2 with
    /// p odd makes the commutator corrections vanish).
    pub fn pth_power(&self, u: &GroupElem) -> GroupElem {
        GroupElem { a: vec![0; self.r], b: u.a.clone() }
    }

    /// The canonical p-th root of a central element `z^b`, namely `g^b`.
    pub fn pth_root(&self, u: &GroupElem) -> Result<GroupElem, GroupError> {
        if u.a.iter().any(|&x| x != 0) {
            return Err(GroupError::NotCentral);
        }
        Ok(GroupElem { a: u.b.clone(), b: vec![0; self.r] })
    }

    pub fn is_central(&self, u: &GroupElem) -> bool {
        (0..self.r).all(|i| self.comm(u, &self.generator(i)) == self.identity())
    }

    /// All elements in enumeration order; requires the order to fit the
    /// scan budget.
    pub fn elements(&self) -> Result<Vec<GroupElem>, GroupError> {
        self.check_budget()?;
        let p = self.p;
        let total = self.order() as u64;
        let mut out = Vec::with_capacity(total as usize);
        for idx in 0..total {
            let mut t = idx;
            let mut a = vec![0u64; self.r];
            let mut b = vec![0u64; self.r];
            for x in a.iter_mut().chain(b.iter_mut()) {
                *x = t % p;
                t /= p;
            }
            out.push(GroupElem { a, b });
        }
        Ok(out)
    }

    fn check_budget(&self) -> Result<(), GroupError> {
        if self.order() > GROUP_SCAN_BUDGET {
            return Err(GroupError::TooLargeForExhaustive {
                order: self.order(),
                budget: GROUP_SCAN_BUDGET,
            });
        }
        Ok(())
    }

    /// Exhaustive invariants: order, exponent, derived subgroup,
    /// Frattini subgroup, center, and the coincidence flags expected of
    /// a group with exactly three characteristic subgroups.
    pub fn invariants(&self) -> Result<GroupInvariants, GroupError> {
        self.check_budget()?;
        let field = self.field();
        let elements = self.elements()?;
        let exponent = elements.iter().map(|u| self.element_order(u)).max().unwrap_or(1);

        // Derived subgroup: commutators are central and bilinear in
        // class 2, so generator pairs span.
        let mut rows = Vec::new();
        for i in 0..self.r {
            for j in (i + 1)..self.r {
                let c = self.comm(&self.generator(i), &self.generator(j));
                assert!(c.a.iter().all(|&x| x == 0));
                rows.push(c.b);
            }
        }
        let derived = Subspace::from_rows(&field, self.r, rows);

        // Frattini subgroup G^p G'; the p-th powers alone span the
        // whole z-part.
        let mut frattini_rows = derived.basis_rows();
        for i in 0..self.r {
            frattini_rows.push(self.pth_power(&self.generator(i)).b);
        }
        let frattini = Subspace::from_rows(&field, self.r, frattini_rows);

        // Center by exhaustive scan.
        let central: Vec<&GroupElem> = elements.iter().filter(|u| self.is_central(u)).collect();
        let center_order = central.len() as u128;
        let center_is_z_part = central.iter().all(|u| u.a.iter().all(|&x| x == 0))
            && center_order == (self.p as u128).pow(self.r as u32);

        let abelian = self.tensor.iter().all(|c| c.iter().all(|&x| x == 0));
        let coincide_and_elementary = !abelian
            && derived.is_full()
            && frattini.is_full()
            && center_is_z_part
            && exponent == self.p * self.p;

        Ok(GroupInvariants {
            order: self.order(),
            exponent,
            derived,
            frattini,
            center_order,
            center_is_z_part,
            coincide_and_elementary,
        })
    }

    /// Powerfulness tests for the full preimage `H` of a subspace `S`
    /// of the generator quotient: `H = {g^a z^b : a in span S}`.
    ///
    /// `H'` and `[H, G]` are computed from *all element pairs* (not
    /// just generators) so this stays an independent oracle for the
    /// algebra-side predicates.  The pair scope can be lowered to
    /// generator level where full enumeration exceeds the pair budget
    /// (sound in class 2; the scope used is recorded in the result).
    pub fn subgroup_tests(
        &self,
        s: &Subspace,
        scope: PairScope,
    ) -> Result<SubgroupFlags, GroupError> {
        if s.ambient() != self.r {
            return Err(GroupError::DimensionMismatch(format!(
                "subspace of F^{} in rank {}",
                s.ambient(),
                self.r
            )));
        }
        let p = self.p;
        let h_size = (p as u128).pow((s.dim() + self.r) as u32);
        let g_size = self.order();
        let full_pairs_ok = h_size * h_size <= PAIR_BUDGET && h_size * g_size <= PAIR_BUDGET;
        let scope_used = match scope {
            PairScope::FullElements if !full_pairs_ok => {
                return Err(GroupError::TooLargeForExhaustive {
                    order: h_size * h_size.max(g_size),
                    budget: PAIR_BUDGET,
                })
            }
            PairScope::FullElements => PairScope::FullElements,
            PairScope::Generators => PairScope::Generators,
            PairScope::Auto => {
                if full_pairs_ok {
                    PairScope::FullElements
                } else {
                    PairScope::Generators
                }
            }
        };

        // H^p as a set of z-part vectors: exactly the span of S.
        let a_vectors: Vec<Vec<u64>> = s.all_vectors();
        let hp: HashSet<Vec<u64>> = a_vectors.iter().cloned().collect();

        let powerful;
        let powerfully_embedded;
        match scope_used {
            PairScope::FullElements => {
                let mut h_elems = Vec::with_capacity(h_size as usize);
                let z_total = (p as u64).pow(self.r as u32);
                for a in &a_vectors {
                    for bidx in 0..z_total {
                        let mut t = bidx;
                        let mut b = vec![0u64; self.r];
                        for x in b.iter_mut() {
                            *x = t % p;
                            t /= p;
                        }
                        h_elems.push(GroupElem { a: a.clone(), b });
                    }
                }
                let mut pow_ok = true;
                'hh: for u in &h_elems {
                    for v in &h_elems {
                        let c = self.comm(u, v);
                        debug_assert!(c.a.iter().all(|&x| x == 0));
                        if !hp.contains(&c.b) {
                            pow_ok = false;
                            break 'hh;
                        }
                    }
                }
                powerful = pow_ok;

                let g_elems = self.elements()?;
                let mut emb_ok = true;
                'hg: for u in &h_elems {
                    for v in &g_elems {
                        let c = self.comm(u, v);
                        if !hp.contains(&c.b) {
                            emb_ok = false;
                            break 'hg;
                        }
                    }
                }
                powerfully_embedded = emb_ok;
            }
            PairScope::Generators => {
                let h_gens: Vec<GroupElem> = s
                    .basis_rows()
                    .into_iter()
                    .map(|a| GroupElem { a, b: vec![0; self.r] })
                    .collect();
                powerful = h_gens
                    .iter()
                    .all(|u| h_gens.iter().all(|v| hp.contains(&self.comm(u, v).b)));
                powerfully_embedded = h_gens.iter().all(|u| {
                    (0..self.r).all(|i| hp.contains(&self.comm(u, &self.generator(i)).b))
                });
            }
            PairScope::Auto => unreachable!("resolved above"),
        }

        Ok(SubgroupFlags { powerful, powerfully_embedded, scope_used })
    }

    /// Block-diagonal k-fold direct power.
    pub fn direct_power(&self, k: usize) -> PcGroup {
        assert!(k >= 1);
        let r = self.r * k;
        let mut tensor = vec![vec![0u64; r]; r * (r - 1) / 2];
        for copy in 0..k {
            let off = copy * self.r;
            for i in 0..self.r {
                for j in (i + 1)..self.r {
                    let src = &self.tensor[pair_index(i, j, self.r)];
                    let dst = &mut tensor[pair_index(off + i, off + j, r)];
                    for t in 0..self.r {
                        dst[off + t] = src[t];
                    }
                }
            }
        }
        PcGroup { p: self.p, r, tensor }
    }

    /// The polycyclic presentation as text, one relation per line:
    /// power relations first, then centrality, then the commutator
    /// relations in lexicographic pair order.
    pub fn presentation_text(&self) -> String {
        let mut out = String::new();
        let r = self.r;
        for i in 1..=r {
            out.push_str(&format!("g{i}^{} = z{i}\n", self.p));
        }
        for i in 1..=r {
            out.push_str(&format!("z{i}^{} = 1\n", self.p));
        }
        for j in 1..=r {
            for i in 1..=r {
                out.push_str(&format!("[z{j},g{i}] = 1\n"));
            }
        }
        for i in 1..=r {
            for j in (i + 1)..=r {
                out.push_str(&format!("[z{i},z{j}] = 1\n"));
            }
        }
        for i in 0..r {
            for j in (i + 1)..r {
                let c = &self.tensor[pair_index(i, j, r)];
                let terms: Vec<String> = c
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(k, &e)| {
                        if e == 1 {
                            format!("z{}", k + 1)
                        } else {
                            format!("z{}^{}", k + 1, e)
                        }
                    })
                    .collect();
                let rhs = if terms.is_empty() { "1".to_string() } else { terms.join("*") };
                out.push_str(&format!("[g{},g{}] = {}\n", i + 1, j + 1, rhs));
            }
        }
        out
    }

    /// Deterministic sample of elements (fixed seed).
    pub fn sample_elements(&self, count: usize, seed: u64) -> Vec<GroupElem> {
        let mut rng = SplitMix::new(seed);
        (0..count)
            .map(|_| {
                let a = (0..self.r).map(|_| rng.below(self.p)).collect();
                let b = (0..self.r).map(|_| rng.below(self.p)).collect();
                GroupElem { a, b }
            })
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct GroupInvariants {
    pub order: u128,
    pub exponent: u64,
    /// Derived subgroup as a subspace of the z-part.
    pub derived: Subspace,
    /// Frattini subgroup as a subspace of the z-part.
    pub frattini: Subspace,
    pub center_order: u128,
    pub center_is_z_part: bool,
    /// Derived = Frattini = center = the z-part, with exponent exactly
    /// p^2 (expected for non-abelian input with full product).
    pub coincide_and_elementary: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairScope {
    /// Enumerate all element pairs (the honest oracle).
    FullElements,
    /// Only subgroup generators (sound in class 2, used when full
    /// enumeration exceeds the pair budget).
    Generators,
    /// Full pairs when affordable, otherwise generators.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubgroupFlags {
    pub powerful: bool,
    pub powerfully_embedded: bool,
    pub scope_used: PairScope,
}

/// Evaluates the candidate generator assignment `g_i -> g^(M_i)`,
/// `z_i -> z^(M_i)` on a normal form, through group arithmetic.
pub fn apply_generator_map(g: &PcGroup, m: &Matrix, u: &GroupElem) -> GroupElem {
    let mut acc = g.identity();
    for (i, &ai) in u.a.iter().enumerate() {
        if ai != 0 {
            let img = GroupElem { a: m.row(i).to_vec(), b: vec![0; g.rank()] };
            for _ in 0..ai {
                acc = g.mul(&acc, &img);
            }
        }
    }
    // z_i = g_i^p maps to (g^(M_i))^p = z^(M_i).
    let mut zb = vec![0u64; g.rank()];
    for (i, &bi) in u.b.iter().enumerate() {
        if bi != 0 {
            for (k, &mik) in m.row(i).iter().enumerate() {
                zb[k] = (zb[k] + bi * mik) % g.p();
            }
        }
    }
    g.mul(&acc, &GroupElem { a: vec![0; g.rank()], b: zb })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sl2;
    use crate::constructions::agl_dim4_algebra;
    use crate::field::Field;

    fn sl2_group() -> PcGroup {
        PcGroup::from_algebra(&sl2(&Field::prime(3).unwrap())).unwrap()
    }

    #[test]
    fn cyclic_p_squared_for_rank_one() {
        let g = PcGroup::from_tensor(5, 1, vec![]).unwrap();
        assert_eq!(g.order(), 25);
        let gen = g.generator(0);
        assert_eq!(g.pow(&gen, 5), g.central_generator(0));
        assert_eq!(g.element_order(&gen), 25);
    }

    #[test]
    fn sl2_group_basics() {
        let g = sl2_group();
        assert_eq!(g.order(), 729);
        // The relation audit runs at construction; spot-check one
        // commutator against the table: <e_0,e_1> = -2e_0 = e_0 mod 3.
        let c = g.comm(&g.generator(0), &g.generator(1));
        assert!(c.a.iter().all(|&x| x == 0));
        assert_eq!(c.b, vec![1, 0, 0]);
    }

    #[test]
    fn mul_identities() {
        let g = sl2_group();
        for u in g.sample_elements(50, 7) {
            assert_eq!(g.mul(&g.identity(), &u), u);
            assert_eq!(g.mul(&u, &g.inv(&u)), g.identity());
            assert_eq!(g.comm(&u, &u), g.identity());
        }
    }

    #[test]
    fn associativity_exhaustive_small() {
        // All triples for p = 3, r <= 2, and sampled triples at rank 3.
        let rank1 = PcGroup::from_tensor(3, 1, vec![]).unwrap();
        let rank2 = PcGroup::from_tensor(3, 2, vec![vec![1, 0]]).unwrap();
        for small in [rank1, rank2] {
            let elems = small.elements().unwrap();
            for u in &elems {
                for v in &elems {
                    for w in &elems {
                        assert_eq!(
                            small.mul(&small.mul(u, v), w),
                            small.mul(u, &small.mul(v, w))
                        );
                    }
                }
            }
        }
        let g = sl2_group();
        let sample = g.sample_elements(40, 11);
        for u in &sample {
            for v in &sample {
                for w in &sample {
                    assert_eq!(g.mul(&g.mul(u, v), w), g.mul(u, &g.mul(v, w)));
                }
            }
        }
    }

    #[test]
    fn pth_power_matches_repeated_multiplication() {
        let g = sl2_group();
        for u in g.sample_elements(100, 3) {
            assert_eq!(g.pth_power(&u), g.pow(&u, 3));
        }
        for pair in g.sample_elements(60, 5).chunks(2) {
            let (x, y) = (&pair[0], &pair[1]);
            let lhs = g.pth_power(&g.mul(x, y));
            let rhs = g.mul(&g.pth_power(x), &g.pth_power(y));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn root_inverts_power() {
        let g = sl2_group();
        assert_eq!(g.pth_root(&g.pth_power(&g.generator(1))).unwrap().a, vec![0, 1, 0]);
        assert!(g.pth_root(&g.generator(0)).is_err());
        for u in g.sample_elements(30, 9) {
            let h = g.pth_power(&u);
            assert_eq!(g.pth_power(&g.pth_root(&h).unwrap()), h);
        }
    }

    #[test]
    fn invariants_for_sl2_group() {
        let g = sl2_group();
        let inv = g.invariants().unwrap();
        assert_eq!(inv.order, 729);
        assert_eq!(inv.exponent, 9);
        assert_eq!(inv.center_order, 27);
        assert!(inv.derived.is_full());
        assert!(inv.coincide_and_elementary);
    }

    #[test]
    fn invariants_for_homocyclic() {
        let g = PcGroup::from_tensor(3, 1, vec![]).unwrap();
        let inv = g.invariants().unwrap();
        assert_eq!(inv.exponent, 9);
        assert_eq!(inv.center_order, 9);
        assert!(!inv.coincide_and_elementary);
    }

    #[test]
    fn invariants_for_agl_dim4_group() {
        let g = PcGroup::from_algebra(&agl_dim4_algebra(&Field::prime(3).unwrap())).unwrap();
        let inv = g.invariants().unwrap();
        assert_eq!(inv.order, 6561);
        assert_eq!(inv.exponent, 9);
        assert!(inv.coincide_and_elementary);
    }

    #[test]
    fn subgroup_flags_for_sl2() {
        let g = sl2_group();
        let f = g.field();
        // S = 0: H = Phi(G) is central, both flags hold.
        let zero = Subspace::zero(&f, 3);
        let flags = g.subgroup_tests(&zero, PairScope::FullElements).unwrap();
        assert!(flags.powerful && flags.powerfully_embedded);
        // S = everything: G itself, powerful since G' = G^p.
        let full = Subspace::full(&f, 3);
        let flags = g.subgroup_tests(&full, PairScope::FullElements).unwrap();
        assert!(flags.powerful && flags.powerfully_embedded);
        // S = span{e_0}: powerful but not powerfully embedded.
        let line = Subspace::from_rows(&f, 3, vec![vec![1, 0, 0]]);
        let flags = g.subgroup_tests(&line, PairScope::FullElements).unwrap();
        assert!(flags.powerful);
        assert!(!flags.powerfully_embedded);
        let gen_flags = g.subgroup_tests(&line, PairScope::Generators).unwrap();
        assert_eq!(
            (flags.powerful, flags.powerfully_embedded),
            (gen_flags.powerful, gen_flags.powerfully_embedded)
        );
    }

    #[test]
    fn direct_power_shapes() {
        let g = sl2_group();
        let g2 = g.direct_power(2);
        assert_eq!(g2.rank(), 6);
        assert_eq!(g2.order(), g.order() * g.order());
        assert_eq!(g.direct_power(1), g);
    }

    #[test]
    fn presentation_text_shape() {
        let g = sl2_group();
        let text = g.presentation_text();
        assert!(text.contains("g1^3 = z1"));
        assert!(text.contains("z1^3 = 1"));
        assert!(text.contains("[z1,g1] = 1"));
        assert!(text.contains("[g1,g2] = z1"));
        assert_eq!(text, g.presentation_text());
    }
}
