//! Arithmetic in the prime field `F_p`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible modulus (exclusive). Products of two residues fit in a `u64`.
pub const MAX_PRIME: u64 = 1 << 31;

/// The field `Z/pZ` for a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

/// A residue in `[0, p)`. Elements do not carry their field; arithmetic goes through [`PrimeField`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::domain(format!("modulus {p} must be below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::domain(format!("modulus {p} is not prime")));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Reduces a signed integer into the field.
    pub fn element(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_u64(&self, v: u64) -> FieldElement {
        FieldElement((v % self.p as u64) as u32)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 as u64 + b.0 as u64;
        FieldElement((s % self.p as u64) as u32)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 as u64 + self.p as u64 - b.0 as u64;
        FieldElement((s % self.p as u64) as u32)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a.0 == 0 {
            a
        } else {
            FieldElement(self.p - a.0)
        }
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    pub fn pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::domain("zero has no inverse"));
        }
        let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.element(t0))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Representative in `(-p/2, p/2]`, used for printing.
    pub fn symmetric(&self, a: FieldElement) -> i64 {
        if (a.0 as u64) * 2 > self.p as u64 {
            a.0 as i64 - self.p as i64
        } else {
            a.0 as i64
        }
    }

    /// Returns `e` when `q = p^e` (with `q = 1` giving `e = 0`).
    pub fn log_p(&self, q: u64) -> Option<u32> {
        if q == 0 {
            return None;
        }
        let mut e = 0;
        let mut r = q;
        while r.is_multiple_of(self.p as u64) {
            r /= self.p as u64;
            e += 1;
        }
        (r == 1).then_some(e)
    }

    /// `p^e`, overflow-checked.
    pub fn power_of_p(&self, e: u32) -> Result<u64> {
        (self.p as u64)
            .checked_pow(e)
            .ok_or_else(|| Error::resource(format!("{}^{} overflows", self.p, e)))
    }
}

/// `ff_inverse` as a free function.
pub fn ff_inverse(a: FieldElement, field: &PrimeField) -> Result<FieldElement> {
    field.inv(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(ff_inverse(f7.element(3), &f7).unwrap(), f7.element(5));
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(ff_inverse(f5.element(4), &f5).unwrap(), f5.element(4));
        assert!(matches!(ff_inverse(FieldElement::ZERO, &f7), Err(Error::Domain(_))));
    }

    #[test]
    fn rejects_composites_and_large_moduli() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(MAX_PRIME).is_err());
        assert!(PrimeField::new(2_147_483_647).is_ok());
    }

    #[test]
    fn field_axioms_exhaustive_small_primes() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let f = PrimeField::new(p).unwrap();
            let elems: Vec<_> = (0..p).map(|v| f.from_u64(v)).collect();
            for &a in &elems {
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                }
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
                for &b in &elems {
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for &c in &elems {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn large_prime_inverse() {
        let f = PrimeField::new(2_147_483_647).unwrap();
        let a = f.element(123_456_789);
        assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        assert_eq!(f.element(-1).value(), 2_147_483_646);
    }

    #[test]
    fn powers_of_p() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.log_p(1), Some(0));
        assert_eq!(f.log_p(27), Some(3));
        assert_eq!(f.log_p(6), None);
        assert_eq!(f.power_of_p(4).unwrap(), 81);
        assert_eq!(f.symmetric(f.element(2)), -1);
    }
}
