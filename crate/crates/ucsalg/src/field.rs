//! Exact arithmetic in prime fields `F_p` (p odd) and small extension
//! fields `F_{p^k}`.
//!
//! Elements are stored as a single `u64` in the range `0..q`: the
//! coefficient vector `(c_0, ..., c_{k-1})` of a residue modulo the
//! defining polynomial is packed in base `p` with `c_0` least
//! significant.  This gives every field a fixed, total enumeration
//! order `0, 1, ..., q-1` that the rest of the crate relies on for
//! deterministic searches.
//!
//! Supported sizes are capped at `q <= 2^16`; all arithmetic is done in
//! `u64` with no overflow.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("modulus polynomial is reducible over F_{0}")]
    ReducibleModulus(u64),
    #[error("modulus must be monic of degree {expected}, got {got:?}")]
    BadModulus { expected: usize, got: Vec<u64> },
    #[error("a modulus was supplied for a prime field")]
    ModulusForPrimeField,
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("field size {q} exceeds the supported cap 2^16")]
    TooLarge { q: u128 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{n} does not divide the multiplicative group order {order}")]
    OrderDoesNotDivide { n: u64, order: u64 },
}

#[derive(Debug, PartialEq, Eq)]
struct FieldRepr {
    p: u64,
    k: usize,
    /// Coefficients of the monic modulus, constant term first, length k
    /// (the leading 1 of degree k is implicit).  Empty when k = 1.
    modulus: Vec<u64>,
    q: u64,
    /// Inverse table, built once at construction.  `inv[0]` is unused.
    inv: Vec<u64>,
}

/// A prime field `F_p` or an extension field `F_{p^k}`.
///
/// Cheap to clone (shared representation).  Equality is structural:
/// two fields are equal iff they have the same characteristic, degree
/// and modulus.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{} (mod {:?})", self.0.p, self.0.k, self.0.modulus)
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial helpers over F_p.  Polynomials are coefficient vectors,
/// constant term first, with no trailing zeros enforced by callers.
mod poly {
    pub fn deg(a: &[u64]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    /// Remainder of `a` modulo the monic polynomial `m` (constant-first
    /// coefficients of length deg(m)+1 with leading coefficient 1).
    pub fn rem(a: &mut Vec<u64>, m: &[u64], p: u64) {
        let dm = m.len() - 1;
        while let Some(da) = deg(a) {
            if da < dm {
                break;
            }
            let lead = a[da];
            let shift = da - dm;
            for i in 0..=dm {
                let sub = (lead * m[i]) % p;
                a[shift + i] = (a[shift + i] + p * p - sub) % p;
            }
        }
        a.truncate(dm.max(1));
        a.resize(dm.max(1), 0);
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len() + b.len()];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        out
    }
}

/// Trial division irreducibility check: divides by every monic
/// polynomial of degree 1..=k/2.
fn is_irreducible(modulus: &[u64], k: usize, p: u64) -> bool {
    for d in 1..=(k / 2) {
        // All monic polynomials of degree d, coefficients enumerated in
        // base p.
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut t = idx;
            for _ in 0..d {
                div.push(t % p);
                t /= p;
            }
            div.push(1);
            // Remainder of modulus (monic of degree k) by div.
            let mut a = modulus.to_vec();
            a.push(1); // leading coefficient of the modulus
            poly::rem(&mut a, &div, p);
            if poly::deg(&a).is_none() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds `F_{p^k}`.  For `k > 1` with no modulus supplied, the
    /// lexicographically least monic irreducible of degree `k` is used
    /// (coefficient vectors compared constant term first), so the
    /// construction is deterministic.
    pub fn new(p: u64, k: usize, modulus: Option<&[u64]>) -> Result<Field, FieldError> {
        if p == 2 {
            return Err(FieldError::EvenCharacteristic);
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q128 = (p as u128).pow(k as u32);
        if q128 > MAX_FIELD_SIZE as u128 {
            return Err(FieldError::TooLarge { q: q128 });
        }
        let q = q128 as u64;
        let modulus: Vec<u64> = if k == 1 {
            if modulus.is_some() {
                return Err(FieldError::ModulusForPrimeField);
            }
            Vec::new()
        } else if let Some(m) = modulus {
            // Expect constant-first coefficients of length k+1 with a
            // monic leading term, or length k with the leading 1 implied.
            let mut m: Vec<u64> = m.iter().map(|&c| c % p).collect();
            if m.len() == k + 1 && m[k] == 1 {
                m.pop();
            } else if m.len() != k {
                return Err(FieldError::BadModulus { expected: k, got: m });
            }
            if !is_irreducible(&m, k, p) {
                return Err(FieldError::ReducibleModulus(p));
            }
            m
        } else {
            let mut found = None;
            for idx in 0..p.pow(k as u32) {
                let mut m = Vec::with_capacity(k);
                let mut t = idx;
                for _ in 0..k {
                    m.push(t % p);
                    t /= p;
                }
                if is_irreducible(&m, k, p) {
                    found = Some(m);
                    break;
                }
            }
            found.expect("an irreducible polynomial of every degree exists")
        };

        let repr = FieldRepr { p, k, modulus, q, inv: Vec::new() };
        let mut field = Field(Arc::new(repr));
        let mut inv = vec![0u64; q as usize];
        for a in 1..q {
            inv[a as usize] = pow_rep_by(&field, a, q - 2);
        }
        Arc::get_mut(&mut field.0).expect("freshly constructed").inv = inv;
        Ok(field)
    }

    /// Prime field shorthand.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        Field::new(p, 1, None)
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    /// Modulus coefficients, constant term first, including the leading
    /// 1 at degree k.  `None` for prime fields.
    pub fn modulus(&self) -> Option<Vec<u64>> {
        if self.0.k == 1 {
            None
        } else {
            let mut m = self.0.modulus.clone();
            m.push(1);
            Some(m)
        }
    }

    // ----- raw representative arithmetic -------------------------------
    //
    // The `*_rep` methods operate on packed representatives in `0..q`.
    // They are the hot path for the linear algebra and search code;
    // `FieldElem` wraps them with field-identity checking.

    #[inline]
    pub fn zero(&self) -> u64 {
        0
    }

    #[inline]
    pub fn one(&self) -> u64 {
        1
    }

    #[inline]
    pub fn add_rep(&self, a: u64, b: u64) -> u64 {
        let r = &*self.0;
        if r.k == 1 {
            let s = a + b;
            return if s >= r.p { s - r.p } else { s };
        }
        let (p, mut a, mut b) = (r.p, a, b);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..r.k {
            let s = (a % p + b % p) % p;
            out += s * scale;
            scale *= p;
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub fn neg_rep(&self, a: u64) -> u64 {
        let r = &*self.0;
        if r.k == 1 {
            return if a == 0 { 0 } else { r.p - a };
        }
        let (p, mut a) = (r.p, a);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..r.k {
            let c = a % p;
            out += if c == 0 { 0 } else { p - c } * scale;
            scale *= p;
            a /= p;
        }
        out
    }

    #[inline]
    pub fn sub_rep(&self, a: u64, b: u64) -> u64 {
        self.add_rep(a, self.neg_rep(b))
    }

    #[inline]
    pub fn mul_rep(&self, a: u64, b: u64) -> u64 {
        let r = &*self.0;
        if r.k == 1 {
            return a * b % r.p;
        }
        let av = self.decode(a);
        let bv = self.decode(b);
        let mut prod = poly::mul(&av, &bv, r.p);
        poly::rem(&mut prod, &self.monic_modulus(), r.p);
        self.encode(&prod)
    }

    #[inline]
    pub fn inv_rep(&self, a: u64) -> Result<u64, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.0.inv[a as usize])
    }

    pub fn pow_rep(&self, a: u64, e: i64) -> Result<u64, FieldError> {
        if e < 0 {
            let inv = self.inv_rep(a)?;
            return Ok(pow_rep_by(self, inv, (-e) as u64));
        }
        Ok(pow_rep_by(self, a, e as u64))
    }

    /// Frobenius endomorphism `a -> a^p`.
    pub fn frobenius_rep(&self, a: u64) -> u64 {
        pow_rep_by(self, a, self.0.p)
    }

    /// Multiplicative order of a nonzero representative.
    pub fn mult_order_rep(&self, a: u64) -> Result<u64, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let group = self.0.q - 1;
        let mut order = group;
        for d in prime_divisors(group) {
            while order % d == 0 && pow_rep_by(self, a, order / d) == 1 {
                order /= d;
            }
        }
        Ok(order)
    }

    /// Least element (in the fixed `0..q` enumeration) of multiplicative
    /// order exactly `n`.  Requires `n | q-1`.
    pub fn element_of_order(&self, n: u64) -> Result<FieldElem, FieldError> {
        let group = self.0.q - 1;
        if n == 0 || group % n != 0 {
            return Err(FieldError::OrderDoesNotDivide { n, order: group });
        }
        for a in 1..self.0.q {
            if self.mult_order_rep(a)? == n {
                return Ok(self.elem_from_rep(a));
            }
        }
        unreachable!("the multiplicative group is cyclic, so an element of every dividing order exists")
    }

    // ----- encoding ------------------------------------------------------

    fn monic_modulus(&self) -> Vec<u64> {
        let mut m = self.0.modulus.clone();
        m.push(1);
        m
    }

    /// Coefficient vector of a representative, length k, constant first.
    pub fn decode(&self, rep: u64) -> Vec<u64> {
        let r = &*self.0;
        let mut out = Vec::with_capacity(r.k);
        let mut t = rep;
        for _ in 0..r.k {
            out.push(t % r.p);
            t /= r.p;
        }
        out
    }

    /// Packs a coefficient vector (entries are reduced mod p; shorter
    /// vectors are zero-extended, longer ones must carry zeros above k).
    pub fn encode(&self, coeffs: &[u64]) -> u64 {
        let r = &*self.0;
        let mut out = 0;
        let mut scale = 1;
        for i in 0..r.k {
            let c = coeffs.get(i).copied().unwrap_or(0) % r.p;
            out += c * scale;
            scale *= r.p;
        }
        debug_assert!(coeffs.iter().skip(r.k).all(|&c| c % r.p == 0));
        out
    }

    /// Embeds a signed integer through the prime subfield.
    pub fn from_int(&self, n: i64) -> u64 {
        let p = self.0.p as i64;
        (n.rem_euclid(p)) as u64
    }

    pub fn elem_from_rep(&self, rep: u64) -> FieldElem {
        debug_assert!(rep < self.0.q);
        FieldElem { field: self.clone(), rep }
    }

    pub fn elem_from_coeffs(&self, coeffs: &[u64]) -> FieldElem {
        self.elem_from_rep(self.encode(coeffs))
    }

    pub fn elem_from_int(&self, n: i64) -> FieldElem {
        self.elem_from_rep(self.from_int(n))
    }

    /// All representatives in enumeration order.
    pub fn reps(&self) -> impl Iterator<Item = u64> {
        0..self.0.q
    }
}

fn pow_rep_by(field: &Field, a: u64, mut e: u64) -> u64 {
    let mut base = a;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = field.mul_rep(acc, base);
        }
        base = field.mul_rep(base, base);
        e >>= 1;
    }
    acc
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element of a specific [`Field`].  Carries its field, so
/// cross-field operations fail with [`FieldError::FieldMismatch`]
/// instead of silently mixing characteristics.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElem {
    field: Field,
    rep: u64,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_prime_field() {
            write!(f, "{}", self.rep)
        } else {
            write!(f, "{:?}", self.field.decode(self.rep))
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FieldElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rep(&self) -> u64 {
        self.rep
    }

    pub fn coeffs(&self) -> Vec<u64> {
        self.field.decode(self.rep)
    }

    pub fn is_zero(&self) -> bool {
        self.rep == 0
    }

    fn same_field(&self, other: &FieldElem) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        self.same_field(other)?;
        Ok(self.field.elem_from_rep(self.field.add_rep(self.rep, other.rep)))
    }

    pub fn sub(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        self.same_field(other)?;
        Ok(self.field.elem_from_rep(self.field.sub_rep(self.rep, other.rep)))
    }

    pub fn mul(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        self.same_field(other)?;
        Ok(self.field.elem_from_rep(self.field.mul_rep(self.rep, other.rep)))
    }

    pub fn neg(&self) -> FieldElem {
        self.field.elem_from_rep(self.field.neg_rep(self.rep))
    }

    pub fn inv(&self) -> Result<FieldElem, FieldError> {
        Ok(self.field.elem_from_rep(self.field.inv_rep(self.rep)?))
    }

    pub fn pow(&self, e: i64) -> Result<FieldElem, FieldError> {
        Ok(self.field.elem_from_rep(self.field.pow_rep(self.rep, e)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent irreducibility oracle: a monic quadratic or cubic
    /// over F_p is irreducible iff it has no root.
    fn has_root(modulus: &[u64], p: u64) -> bool {
        (0..p).any(|x| {
            let mut acc = 0u64;
            let mut xp = 1u64;
            for &c in modulus {
                acc = (acc + c * xp) % p;
                xp = xp * x % p;
            }
            acc == 0
        })
    }

    #[test]
    fn prime_field_basics() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.order(), 7);
        assert_eq!(f7.inv_rep(3).unwrap(), 5);
        assert_eq!(f7.mul_rep(3, 5), 1);
    }

    #[test]
    fn rejects_non_prime_and_even() {
        assert_eq!(Field::prime(9).unwrap_err(), FieldError::NotPrime(9));
        assert_eq!(Field::prime(2).unwrap_err(), FieldError::EvenCharacteristic);
        assert_eq!(Field::new(4, 1, None).unwrap_err(), FieldError::NotPrime(4));
    }

    #[test]
    fn f9_least_modulus_is_x2_plus_1() {
        // Oracle: exhaustive scan of the 9 monic quadratics over F_3 in
        // lexicographic (constant-first) order; the first with no root
        // is x^2 + 1.
        let mut expected = None;
        for idx in 0..9u64 {
            let m = vec![idx % 3, idx / 3, 1];
            if !has_root(&m, 3) {
                expected = Some(m);
                break;
            }
        }
        assert_eq!(expected, Some(vec![1, 0, 1]));

        let f9 = Field::new(3, 2, None).unwrap();
        assert_eq!(f9.modulus(), Some(vec![1, 0, 1]));
        assert_eq!(f9.order(), 9);
    }

    #[test]
    fn f9_x_squared_is_two() {
        let f9 = Field::new(3, 2, None).unwrap();
        let x = f9.encode(&[0, 1]);
        // x^2 = -1 = 2 modulo x^2 + 1.
        assert_eq!(f9.mul_rep(x, x), f9.encode(&[2, 0]));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 2 = x^2 - 1 = (x-1)(x+1) over F_3.
        assert_eq!(
            Field::new(3, 2, Some(&[2, 0, 1])).unwrap_err(),
            FieldError::ReducibleModulus(3)
        );
    }

    #[test]
    fn negative_exponent() {
        let f11 = Field::prime(11).unwrap();
        assert_eq!(f11.pow_rep(2, -1).unwrap(), 6);
        assert_eq!(f11.pow_rep(0, 3).unwrap(), 0);
        assert!(f11.pow_rep(0, -1).is_err());
    }

    #[test]
    fn element_of_order_examples() {
        let f11 = Field::prime(11).unwrap();
        // Oracle: scan 1..11 for the least element of exact order 5.
        let mut expected = None;
        for a in 1..11u64 {
            let mut pow = 1u64;
            let mut ord = 0;
            for e in 1..=10 {
                pow = pow * a % 11;
                if pow == 1 {
                    ord = e;
                    break;
                }
            }
            if ord == 5 {
                expected = Some(a);
                break;
            }
        }
        assert_eq!(expected, Some(3));
        assert_eq!(f11.element_of_order(5).unwrap().rep(), 3);
        assert_eq!(f11.element_of_order(1).unwrap().rep(), 1);

        let f7 = Field::prime(7).unwrap();
        assert_eq!(
            f7.element_of_order(5).unwrap_err(),
            FieldError::OrderDoesNotDivide { n: 5, order: 6 }
        );
    }

    #[test]
    fn element_of_order_properties() {
        for (p, k) in [(3, 1), (7, 1), (3, 2), (11, 1), (13, 1)] {
            let f = Field::new(p, k, None).unwrap();
            let group = f.order() - 1;
            for n in 1..=group {
                if group % n != 0 {
                    continue;
                }
                let z = f.element_of_order(n).unwrap();
                assert_eq!(f.pow_rep(z.rep(), n as i64).unwrap(), 1);
                for d in 1..n {
                    if n % d == 0 {
                        assert_ne!(f.pow_rep(z.rep(), d as i64).unwrap(), 1, "order not exact");
                    }
                }
            }
        }
    }

    #[test]
    fn cross_field_is_error() {
        let f7 = Field::prime(7).unwrap();
        let f11 = Field::prime(11).unwrap();
        let a = f7.elem_from_int(3);
        let b = f11.elem_from_int(3);
        assert_eq!(a.add(&b).unwrap_err(), FieldError::FieldMismatch);
    }

    #[test]
    fn size_cap() {
        assert!(matches!(Field::new(3, 11, None).unwrap_err(), FieldError::TooLarge { .. }));
    }

    mod axioms {
        use super::*;
        use proptest::prelude::*;

        fn fields() -> Vec<Field> {
            vec![
                Field::prime(3).unwrap(),
                Field::prime(7).unwrap(),
                Field::prime(13).unwrap(),
                Field::new(3, 2, None).unwrap(),
                Field::new(5, 2, None).unwrap(),
            ]
        }

        proptest! {
            #[test]
            fn ring_axioms(which in 0usize..5, a in 0u64..60, b in 0u64..60, c in 0u64..60) {
                let f = fields()[which].clone();
                let q = f.order();
                let (a, b, c) = (a % q, b % q, c % q);
                prop_assert_eq!(f.add_rep(a, f.add_rep(b, c)), f.add_rep(f.add_rep(a, b), c));
                prop_assert_eq!(f.mul_rep(a, f.mul_rep(b, c)), f.mul_rep(f.mul_rep(a, b), c));
                prop_assert_eq!(f.mul_rep(a, f.add_rep(b, c)), f.add_rep(f.mul_rep(a, b), f.mul_rep(a, c)));
                prop_assert_eq!(f.add_rep(a, f.neg_rep(a)), 0);
                if a != 0 {
                    let inv = f.inv_rep(a).unwrap();
                    prop_assert_eq!(f.mul_rep(a, inv), 1);
                }
            }

            #[test]
            fn frobenius_is_additive(a in 0u64..81, b in 0u64..81) {
                let f = Field::new(3, 4, None).unwrap();
                let (a, b) = (a % f.order(), b % f.order());
                let lhs = f.frobenius_rep(f.add_rep(a, b));
                let rhs = f.add_rep(f.frobenius_rep(a), f.frobenius_rep(b));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
