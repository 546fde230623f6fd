//! Permutation generators for AGL(1,t) / AGammaL(1,t) and deleted
//! permutation modules.
//!
//! The affine generators act on the `t` points of the field with `t`
//! elements, labeled by the fixed enumeration of that field.  Point
//! arithmetic needs characteristic 2 as well (t may be a power of 2),
//! so a small standalone GF(t) table is built here instead of reusing
//! [`crate::field::Field`], which is odd-characteristic only.

use super::ConstructError;
use crate::field::Field;
use crate::linalg::{Matrix, ModuleRep};

/// Tiny finite field of order `t <= 32` used only for point labels.
struct PointField {
    p: u64,
    k: usize,
}

impl PointField {
    fn new(t: usize) -> Option<PointField> {
        if !(2..=32).contains(&t) {
            return None;
        }
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let mut k = 0;
            let mut n = t as u64;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            if n == 1 && k >= 1 {
                return Some(PointField { p, k });
            }
        }
        None
    }

    fn decode(&self, rep: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.k);
        let mut t = rep as u64;
        for _ in 0..self.k {
            out.push(t % self.p);
            t /= self.p;
        }
        out
    }

    fn encode(&self, coeffs: &[u64]) -> usize {
        let mut out = 0u64;
        let mut scale = 1;
        for i in 0..self.k {
            out += coeffs.get(i).copied().unwrap_or(0) % self.p * scale;
            scale *= self.p;
        }
        out as usize
    }

    /// Lexicographically least monic irreducible of degree k, found by
    /// exhaustive root/divisor checking (degrees here are at most 5).
    fn modulus(&self) -> Vec<u64> {
        if self.k == 1 {
            return vec![0, 1];
        }
        let total = self.p.pow(self.k as u32);
        'cand: for idx in 0..total {
            let mut m = self.decode(idx as usize);
            m.push(1);
            for d in 1..=(self.k / 2) {
                let dcount = self.p.pow(d as u32);
                for didx in 0..dcount {
                    let div: Vec<u64> = {
                        let mut v = Vec::with_capacity(d + 1);
                        let mut t = didx;
                        for _ in 0..d {
                            v.push(t % self.p);
                            t /= self.p;
                        }
                        v.push(1);
                        v
                    };
                    if poly_rem(&m, &div, self.p).iter().all(|&c| c == 0) {
                        continue 'cand;
                    }
                }
            }
            return m;
        }
        unreachable!("irreducible polynomials of every degree exist")
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (av, bv) = (self.decode(a), self.decode(b));
        let sum: Vec<u64> = av.iter().zip(&bv).map(|(&x, &y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    fn mul(&self, a: usize, b: usize, modulus: &[u64]) -> usize {
        let (av, bv) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u64; av.len() + bv.len()];
        for (i, &x) in av.iter().enumerate() {
            for (j, &y) in bv.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let rem = poly_rem(&prod, modulus, self.p);
        self.encode(&rem)
    }

    fn pow(&self, a: usize, mut e: u64, modulus: &[u64]) -> usize {
        let mut base = a;
        let mut acc = 1usize;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base, modulus);
            }
            base = self.mul(base, base, modulus);
            e >>= 1;
        }
        acc
    }
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let dm = m.len() - 1;
    loop {
        let da = match a.iter().rposition(|&c| c != 0) {
            Some(d) if d >= dm => d,
            _ => break,
        };
        let lead = a[da];
        let shift = da - dm;
        for i in 0..=dm {
            a[shift + i] = (a[shift + i] + p * p - lead * m[i] % p) % p;
        }
    }
    a.truncate(dm.max(1));
    a.resize(dm.max(1), 0);
    a
}

/// Generators of AGL(1,t) (or AGammaL(1,t) with `with_frobenius`) as
/// permutations of the `t` field points in enumeration order:
/// translation `x -> x + 1`, multiplication `x -> g x` by the least
/// multiplicative generator, and `x -> x^p` when requested and t is not
/// prime.
pub fn agl_generators(t: usize, with_frobenius: bool) -> Result<Vec<Vec<usize>>, ConstructError> {
    let pf = PointField::new(t).ok_or(ConstructError::UnsupportedT(t))?;
    let modulus = pf.modulus();
    let mut gens = Vec::new();

    let translation: Vec<usize> = (0..t).map(|x| pf.add(x, 1)).collect();
    gens.push(translation);

    // Least primitive element in enumeration order.
    let group = (t - 1) as u64;
    let primitive = (2..t)
        .find(|&g| {
            let mut seen = 1usize;
            let mut acc = g;
            while acc != 1 {
                acc = pf.mul(acc, g, &modulus);
                seen += 1;
            }
            seen as u64 == group
        })
        .expect("the multiplicative group of a finite field is cyclic");
    gens.push((0..t).map(|x| pf.mul(primitive, x, &modulus)).collect());

    if with_frobenius && pf.k > 1 {
        gens.push((0..t).map(|x| pf.pow(x, pf.p, &modulus)).collect());
    }
    Ok(gens)
}

/// Permutation matrix of a point map (row `i` has a 1 in column
/// `perm[i]`).
pub fn perm_matrix(field: &Field, perm: &[usize]) -> Matrix {
    let n = perm.len();
    let mut m = Matrix::zeros(field, n, n);
    for (i, &j) in perm.iter().enumerate() {
        m.set(i, j, 1);
    }
    m
}

/// The `(t-1)`-dimensional deleted permutation module over `field`:
/// basis `u_i = x_i - x_{t-1}` for `i = 0..t-2`, with the action
/// induced from permuting the natural basis `x_0..x_{t-1}`.
/// Requires the characteristic not to divide `t`.
pub fn deleted_perm_module(
    perms: &[Vec<usize>],
    field: &Field,
) -> Result<ModuleRep, ConstructError> {
    let t = perms.first().map(|p| p.len()).unwrap_or(0);
    if t < 2 {
        return Err(ConstructError::UnsupportedT(t));
    }
    if field.characteristic() as usize > 0 && t % field.characteristic() as usize == 0 {
        return Err(ConstructError::CharacteristicDividesT {
            p: field.characteristic(),
            t,
        });
    }
    let d = t - 1;
    let mut gens = Vec::with_capacity(perms.len());
    for perm in perms {
        if perm.len() != t {
            return Err(ConstructError::BadPermutation { got: perm.len(), expected: t });
        }
        let mut hit = vec![false; t];
        for &img in perm {
            if img >= t || hit[img] {
                return Err(ConstructError::BadPermutation { got: perm.len(), expected: t });
            }
            hit[img] = true;
        }
        // u_i -> u_{perm(i)} - u_{perm(t-1)}, with u_{t-1} read as 0.
        let mut m = Matrix::zeros(field, d, d);
        let last = perm[t - 1];
        for i in 0..d {
            let img = perm[i];
            if img < d {
                m.set(i, img, field.add_rep(m.get(i, img), 1));
            }
            if last < d {
                m.set(i, last, field.sub_rep(m.get(i, last), 1));
            }
        }
        gens.push(m);
    }
    Ok(ModuleRep::new(field, d, gens)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agl_generators_for_t5() {
        let gens = agl_generators(5, false).unwrap();
        assert_eq!(gens.len(), 2);
        // Translation is the 5-cycle (0 1 2 3 4).
        assert_eq!(gens[0], vec![1, 2, 3, 4, 0]);
        // Multiplication by 2 is the 4-cycle (1 2 4 3).
        assert_eq!(gens[1], vec![0, 2, 4, 1, 3]);
    }

    #[test]
    fn agl_generators_for_t7() {
        let gens = agl_generators(7, false).unwrap();
        assert_eq!(gens[0], vec![1, 2, 3, 4, 5, 6, 0]);
        // 3 is the least primitive root mod 7; the map x -> 3x.
        assert_eq!(gens[1], vec![0, 3, 6, 2, 5, 1, 4]);
    }

    #[test]
    fn agl_generators_for_t9_with_frobenius() {
        let gens = agl_generators(9, true).unwrap();
        assert_eq!(gens.len(), 3);
        let frob = &gens[2];
        // The Frobenius x -> x^3 of F_9 is an involution fixing F_3.
        for x in 0..9 {
            assert_eq!(frob[frob[x]], x);
        }
        assert_eq!(frob[0], 0);
        assert_eq!(frob[1], 1);
        assert_eq!(frob[2], 2);
        assert!((3..9).any(|x| frob[x] != x));
    }

    #[test]
    fn identity_permutation_gives_identity_matrix() {
        let f = Field::prime(3).unwrap();
        let id: Vec<usize> = (0..5).collect();
        let rep = deleted_perm_module(&[id], &f).unwrap();
        assert_eq!(rep.gens()[0], Matrix::identity(&f, 4));
    }

    #[test]
    fn characteristic_dividing_t_is_rejected() {
        let f = Field::prime(5).unwrap();
        let err = deleted_perm_module(&[vec![1, 2, 3, 4, 0]], &f).unwrap_err();
        assert_eq!(err, ConstructError::CharacteristicDividesT { p: 5, t: 5 });
    }

    #[test]
    fn deleted_modules_for_t5_are_irreducible_where_expected() {
        // 3 = -2 mod 5: the cycle alone acts irreducibly over F_3.
        let f3 = Field::prime(3).unwrap();
        let c5 = deleted_perm_module(&agl_generators(5, false).unwrap()[..1], &f3).unwrap();
        assert!(c5.is_irreducible().unwrap());

        // Over F_11 (11 = 1 mod 5) the cycle alone is reducible but the
        // full AGL(1,5) module is irreducible.
        let f11 = Field::prime(11).unwrap();
        let gens = agl_generators(5, false).unwrap();
        let c5_11 = deleted_perm_module(&gens[..1], &f11).unwrap();
        assert!(!c5_11.is_irreducible().unwrap());
        let agl = deleted_perm_module(&gens, &f11).unwrap();
        assert!(agl.is_irreducible().unwrap());
    }
}
