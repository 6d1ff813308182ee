//! Exact scalar arithmetic.
//!
//! Rings are represented by lightweight "structure" values whose methods
//! operate on plain element data. This keeps runtime parameters (a prime
//! modulus, a coefficient field for polynomials) out of the element types
//! and lets one generic matrix kernel serve every coefficient ring.

use std::cmp::Ordering;
use std::fmt::Debug;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Zero};

use crate::ring::mul_mod;

/// A commutative ring with decidable equality on elements.
pub trait Ring: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    // the conversions take the ring because moduli live there, not in the
    // element type
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;
    /// Canonical image of an arbitrary-precision integer.
    #[allow(clippy::wrong_self_convention)]
    fn from_integer(&self, n: &BigInt) -> Self::Elem;
    fn display(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

pub trait Field: Ring {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
}

/// A Euclidean domain: enough structure to run Smith normal form.
pub trait EuclideanRing: Ring {
    /// Division with remainder; the remainder is strictly smaller than the
    /// divisor in the Euclidean order. The divisor must be nonzero.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// Compares Euclidean sizes of two nonzero elements (used for pivoting).
    fn norm_cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    /// Writes `a = u * c` with `u` a unit and `c` the canonical associate
    /// (nonnegative over the integers, monic over polynomials). Returns
    /// `(c, u)`.
    fn canonical_assoc(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// Inverse of a unit.
    fn unit_inv(&self, u: &Self::Elem) -> Self::Elem;
}

/// The ring of arbitrary-precision integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRing;

impl Ring for IntRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_int(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn from_integer(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn display(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

impl EuclideanRing for IntRing {
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        (a / b, a % b)
    }
    fn norm_cmp(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.magnitude().cmp(b.magnitude())
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude().is_one()
    }
    fn canonical_assoc(&self, a: &BigInt) -> (BigInt, BigInt) {
        if a.sign() == Sign::Minus {
            (-a, BigInt::from(-1))
        } else {
            (a.clone(), BigInt::one())
        }
    }
    fn unit_inv(&self, u: &BigInt) -> BigInt {
        u.clone()
    }
}

/// The field of rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatField;

impl Ring for RatField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_integer(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn display(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

impl Field for RatField {
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
}

/// The field with `p` elements, `p` prime. Elements are residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModField {
    pub p: u64,
}

impl ModField {
    pub fn new(p: u64) -> Self {
        debug_assert!(crate::ring::is_prime(p));
        ModField { p }
    }
}

impl Ring for ModField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn from_integer(&self, n: &BigInt) -> u64 {
        let m = n % BigInt::from(self.p);
        let m = if m.sign() == Sign::Minus {
            m + BigInt::from(self.p)
        } else {
            m
        };
        let digits = m.to_u64_digits().1;
        digits.first().copied().unwrap_or(0)
    }
    fn display(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl Field for ModField {
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero mod {}", self.p);
        // extended Euclid on signed 128-bit; p fits in u64
        let (mut t, mut new_t) = (0i128, 1i128);
        let (mut r, mut new_r) = (self.p as i128, *a as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1);
        t.rem_euclid(self.p as i128) as u64
    }
}

/// Dense univariate polynomial over a field, in the variable `z`.
/// Coefficients are stored from degree 0 up, with no trailing zeros;
/// the zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<C> {
    pub coeffs: Vec<C>,
}

impl<C> Poly<C> {
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }
}

/// The polynomial ring `F[z]` over a field `F`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<F: Field> {
    pub base: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(base: F) -> Self {
        PolyRing { base }
    }

    pub fn from_coeffs(&self, coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        let mut coeffs = coeffs;
        while coeffs.last().map(|c| self.base.is_zero(c)).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    /// The polynomial `1 - z`.
    pub fn one_minus_z(&self) -> Poly<F::Elem> {
        self.from_coeffs(vec![self.base.one(), self.base.neg(&self.base.one())])
    }

    fn leading(&self, a: &Poly<F::Elem>) -> F::Elem {
        a.coeffs.last().cloned().unwrap_or_else(|| self.base.zero())
    }

    /// Strips every factor of `z`, i.e. divides by the largest power of `z`
    /// dividing the polynomial. Units of the Laurent ring `F[z, 1/z]` are
    /// exactly the monomials, so this is "reduction modulo Laurent units".
    pub fn strip_z_powers(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.coeffs.is_empty() {
            return a.clone();
        }
        let first_nonzero = a
            .coeffs
            .iter()
            .position(|c| !self.base.is_zero(c))
            .expect("normalized nonzero polynomial");
        Poly {
            coeffs: a.coeffs[first_nonzero..].to_vec(),
        }
    }
}

impl<F: Field> Ring for PolyRing<F> {
    type Elem = Poly<F::Elem>;

    fn zero(&self) -> Poly<F::Elem> {
        Poly { coeffs: Vec::new() }
    }
    fn one(&self) -> Poly<F::Elem> {
        self.constant(self.base.one())
    }
    fn is_zero(&self, a: &Poly<F::Elem>) -> bool {
        a.coeffs.is_empty()
    }
    fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }
    fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero());
            let y = b.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero());
            out.push(self.base.add(&x, &y));
        }
        self.from_coeffs(out)
    }
    fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return self.zero();
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }
    fn from_int(&self, n: i64) -> Poly<F::Elem> {
        self.constant(self.base.from_int(n))
    }
    fn from_integer(&self, n: &BigInt) -> Poly<F::Elem> {
        self.constant(self.base.from_integer(n))
    }
    fn display(&self, a: &Poly<F::Elem>) -> String {
        if a.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(c) {
                continue;
            }
            let c = self.base.display(c);
            terms.push(match i {
                0 => c,
                1 if c == "1" => "z".to_string(),
                1 => format!("{c}*z"),
                _ if c == "1" => format!("z^{i}"),
                _ => format!("{c}*z^{i}"),
            });
        }
        terms.join(" + ")
    }
}

impl<F: Field> EuclideanRing for PolyRing<F> {
    fn div_rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let db = b.degree().expect("division by zero polynomial");
        let inv_lead = self.base.inv(&self.leading(b));
        let mut rem = a.coeffs.clone();
        let mut quot = vec![self.base.zero(); a.coeffs.len().saturating_sub(db)];
        while rem.len() > db {
            let d = rem.len() - 1 - db;
            let c = self.base.mul(rem.last().unwrap(), &inv_lead);
            if !self.base.is_zero(&c) {
                for (i, bc) in b.coeffs.iter().enumerate() {
                    let t = self.base.mul(&c, bc);
                    rem[d + i] = self.base.sub(&rem[d + i], &t);
                }
                quot[d] = c;
            }
            rem.pop();
            while rem.last().map(|c| self.base.is_zero(c)).unwrap_or(false) {
                rem.pop();
            }
        }
        (self.from_coeffs(quot), Poly { coeffs: rem })
    }
    fn norm_cmp(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Ordering {
        a.degree().cmp(&b.degree())
    }
    fn is_unit(&self, a: &Poly<F::Elem>) -> bool {
        a.degree() == Some(0)
    }
    fn canonical_assoc(&self, a: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
        if a.coeffs.is_empty() {
            return (self.zero(), self.one());
        }
        let lead = self.leading(a);
        let inv = self.base.inv(&lead);
        let monic = Poly {
            coeffs: a.coeffs.iter().map(|c| self.base.mul(c, &inv)).collect(),
        };
        (monic, self.constant(lead))
    }
    fn unit_inv(&self, u: &Poly<F::Elem>) -> Poly<F::Elem> {
        assert!(self.is_unit(u), "not a unit in F[z]");
        self.constant(self.base.inv(&u.coeffs[0]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_field_inverses() {
        let f = ModField::new(7);
        for a in 1..7u64 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        let f = ModField::new(2);
        assert_eq!(f.inv(&1), 1);
        assert_eq!(f.neg(&1), 1);
    }

    #[test]
    fn poly_division() {
        let ring = PolyRing::new(RatField);
        // (z^2 - 1) = (z + 1)(z - 1) + 0
        let a = ring.from_coeffs(vec![
            RatField.from_int(-1),
            RatField.from_int(0),
            RatField.from_int(1),
        ]);
        let b = ring.from_coeffs(vec![RatField.from_int(1), RatField.from_int(1)]);
        let (q, r) = ring.div_rem(&a, &b);
        assert!(ring.is_zero(&r));
        assert_eq!(
            q,
            ring.from_coeffs(vec![RatField.from_int(-1), RatField.from_int(1)])
        );
    }

    #[test]
    fn poly_division_with_remainder_mod_2() {
        let ring = PolyRing::new(ModField::new(2));
        // z^3 + z + 1 divided by z^2 + 1 leaves remainder 1 over F_2
        let a = ring.from_coeffs(vec![1, 1, 0, 1]);
        let b = ring.from_coeffs(vec![1, 0, 1]);
        let (q, r) = ring.div_rem(&a, &b);
        assert_eq!(ring.add(&ring.mul(&q, &b), &r), a);
        assert_eq!(r, ring.one());
    }

    #[test]
    fn strip_z_powers() {
        let ring = PolyRing::new(RatField);
        // z^2 - z^3 = z^2 (1 - z)
        let a = ring.from_coeffs(vec![
            RatField.from_int(0),
            RatField.from_int(0),
            RatField.from_int(1),
            RatField.from_int(-1),
        ]);
        assert_eq!(ring.strip_z_powers(&a), ring.one_minus_z());
    }

    #[test]
    fn canonical_assoc_is_monic() {
        let ring = PolyRing::new(RatField);
        let a = ring.from_coeffs(vec![RatField.from_int(2), RatField.from_int(-2)]);
        let (monic, unit) = ring.canonical_assoc(&a);
        assert_eq!(ring.mul(&monic, &unit), a);
        assert_eq!(
            monic,
            ring.from_coeffs(vec![RatField.from_int(-1), RatField.from_int(1)])
        );
    }

    #[test]
    fn from_integer_reduces_mod_p() {
        let f = ModField::new(5);
        assert_eq!(f.from_integer(&BigInt::from(-1)), 4);
        assert_eq!(f.from_integer(&BigInt::from(12)), 2);
        assert_eq!(f.from_integer(&BigInt::from(0)), 0);
    }
}
