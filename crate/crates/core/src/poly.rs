//! Sparse polynomials over a [`WeightedRing`].

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::ring::{Monomial, WeightedRing};

/// Result of [`Polynomial::weighted_degree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degree {
    Homogeneous(u64),
    Inhomogeneous(BTreeSet<u64>),
}

/// Sum of terms with nonzero coefficients, sorted descending in the ring's order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: WeightedRing,
    terms: Vec<(Monomial, FieldElement)>,
}

fn overflow() -> Error {
    Error::resource("exponent overflow")
}

impl Polynomial {
    pub fn zero(ring: &WeightedRing) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &WeightedRing) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &WeightedRing, c: i64) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), ring.field().element(c))
    }

    pub fn var(ring: &WeightedRing, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i), FieldElement::ONE)
    }

    pub fn term(ring: &WeightedRing, m: Monomial, c: FieldElement) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match the ring");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &WeightedRing, exps: &[u32]) -> Self {
        Self::term(ring, Monomial::from_exponents(exps.to_vec()), FieldElement::ONE)
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &WeightedRing, terms: impl IntoIterator<Item = (Monomial, FieldElement)>) -> Self {
        let f = ring.field();
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match the ring");
            let e = acc.entry(m).or_insert(FieldElement::ZERO);
            *e = f.add(*e, c);
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &WeightedRing, acc: HashMap<Monomial, FieldElement>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Wraps terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &WeightedRing, terms: Vec<(Monomial, FieldElement)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Drops the leading term.
    pub(crate) fn into_tail(mut self) -> Self {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
        self
    }

    pub fn ring(&self) -> &WeightedRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn lead_term(&self) -> Option<&(Monomial, FieldElement)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> FieldElement {
        self.terms.first().map_or(FieldElement::ZERO, |t| t.1)
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms
            .binary_search_by(|(n, _)| self.ring.cmp_monomials(m, n))
            .map_or(FieldElement::ZERO, |i| self.terms[i].1)
    }

    pub(crate) fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::usage(format!(
                "polynomials live in different rings: {:?} vs {:?}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let f = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(*a, c))).collect(),
        }
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lead_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.field().inv(*c).expect("leading coefficient is nonzero");
                self.scale(inv)
            }
        }
    }

    /// `self + c * m * g` by a single merge pass.
    pub fn add_scaled_shifted(&self, c: FieldElement, m: &Monomial, g: &Polynomial) -> Result<Self> {
        self.check_ring(g)?;
        if c.is_zero() || g.is_zero() {
            return Ok(self.clone());
        }
        let f = self.ring.field();
        let mut shifted = Vec::with_capacity(g.terms.len());
        for (gm, gc) in &g.terms {
            shifted.push((gm.checked_mul(m).ok_or_else(overflow)?, f.mul(*gc, c)));
        }
        Ok(self.merge(&shifted))
    }

    /// Adds a sorted term list (same ring) to `self`.
    fn merge(&self, other: &[(Monomial, FieldElement)]) -> Self {
        let f = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, other);
        while i < a.len() && j < b.len() {
            match self.ring.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a[i].1, b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(&other.terms))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(&other.neg_terms()))
    }

    fn neg_terms(&self) -> Vec<(Monomial, FieldElement)> {
        let f = self.ring.field();
        self.terms.iter().map(|(m, c)| (m.clone(), f.neg(*c))).collect()
    }

    pub fn mul_term(&self, m: &Monomial, c: FieldElement) -> Result<Self> {
        Self::zero(&self.ring).add_scaled_shifted(c, m, self)
    }

    /// Exact product (`poly_mul`). Fails on ring mismatch or exponent overflow.
    pub fn try_mul(&self, other: &Polynomial) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(m, *c);
        }
        let f = self.ring.field();
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::with_capacity(small.len() * big.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                let m = m1.checked_mul(m2).ok_or_else(overflow)?;
                let e = acc.entry(m).or_insert(FieldElement::ZERO);
                *e = f.add(*e, f.mul(*c1, *c2));
            }
        }
        Ok(Self::from_map(&self.ring, acc))
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Result<Self> {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self^(p^e)` computed term-wise: over `F_p`, `(sum c m)^q = sum c m^q`.
    pub fn frobenius(&self, e: u32) -> Result<Self> {
        let q = self.ring.field().power_of_p(e)?;
        self.frobenius_q(q)
    }

    pub(crate) fn frobenius_q(&self, q: u64) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.checked_pow(q).ok_or_else(overflow)?, *c));
        }
        // m -> m^q is strictly monotone for a monomial order, so the order is preserved
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn weighted_degree(&self) -> Result<Degree> {
        if self.is_zero() {
            return Err(Error::domain("the zero polynomial has no degree"));
        }
        let degs: BTreeSet<u64> = self.terms.iter().map(|(m, _)| self.ring.degree(m)).collect();
        Ok(if degs.len() == 1 {
            Degree::Homogeneous(*degs.iter().next().unwrap())
        } else {
            Degree::Inhomogeneous(degs)
        })
    }

    /// The degree if homogeneous; zero counts as homogeneous of every degree and yields `None`.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        match self.weighted_degree() {
            Ok(Degree::Homogeneous(d)) => Some(d),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Re-embeds into `target`, sending variable `i` to `index_map[i]`.
    pub fn remap(&self, target: &WeightedRing, index_map: &[usize]) -> Self {
        assert_eq!(index_map.len(), self.ring.nvars());
        let n = target.nvars();
        Self::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[index_map[i]] += x;
                }
                (Monomial::from_exponents(e), *c)
            }),
        )
    }

    /// Exact division by `g`; errors if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Result<Self> {
        self.check_ring(g)?;
        let (gm, gc) = g
            .lead_term()
            .ok_or_else(|| Error::domain("division by zero polynomial"))?;
        let f = self.ring.field();
        let ginv = f.inv(*gc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.lead_term().cloned() {
            let qm = gm
                .quotient_of(&m)
                .ok_or_else(|| Error::Internal("inexact polynomial division".into()))?;
            let qc = f.mul(c, ginv);
            rem = rem.add_scaled_shifted(f.neg(qc), &qm, g)?;
            quot.push((qm, qc));
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: quot,
        })
    }

    /// Largest exponent of variable `i` across terms.
    pub fn max_exponent(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponents()[i]).max().unwrap_or(0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let s = field.symmetric(*c);
            let (neg, abs) = (s < 0, s.unsigned_abs());
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.neg_terms(),
        }
    }
}

/// `poly_mul` as a free function.
pub fn poly_mul(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.try_mul(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ring(p: u64) -> WeightedRing {
        WeightedRing::standard(p, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn freshmans_dream() {
        let r2 = ring(2);
        let s = parse_poly("x + y", &r2).unwrap();
        assert_eq!(poly_mul(&s, &s).unwrap(), parse_poly("x^2 + y^2", &r2).unwrap());
        let r3 = ring(3);
        let s = parse_poly("x + y", &r3).unwrap();
        assert_eq!(s.pow(3).unwrap(), parse_poly("x^3 + y^3", &r3).unwrap());
        assert_eq!(s.frobenius(1).unwrap(), s.pow(3).unwrap());
    }

    #[test]
    fn multiplicative_identity_and_mismatch() {
        let r = ring(7);
        let f = parse_poly("3*x^2*y - z + 5", &r).unwrap();
        assert_eq!(poly_mul(&f, &Polynomial::one(&r)).unwrap(), f);
        let other = WeightedRing::standard(5, &["x", "y", "z"]).unwrap();
        assert!(matches!(poly_mul(&f, &Polynomial::one(&other)), Err(Error::Usage(_))));
    }

    #[test]
    fn weighted_degrees() {
        let r = WeightedRing::new(2, &["x", "y", "z"], &[15, 10, 6]).unwrap();
        let f = parse_poly("x^2 + y^3 + z^5", &r).unwrap();
        assert_eq!(f.weighted_degree().unwrap(), Degree::Homogeneous(30));
        assert_eq!(Polynomial::one(&r).weighted_degree().unwrap(), Degree::Homogeneous(0));
        let r23 = WeightedRing::new(5, &["x", "y"], &[2, 3]).unwrap();
        let g = parse_poly("x + y", &r23).unwrap();
        assert_eq!(
            g.weighted_degree().unwrap(),
            Degree::Inhomogeneous([2, 3].into_iter().collect())
        );
        assert!(matches!(Polynomial::zero(&r).weighted_degree(), Err(Error::Domain(_))));
    }

    #[test]
    fn exact_division() {
        let r = ring(5);
        let f = parse_poly("x^2 + x*y", &r).unwrap();
        let g = parse_poly("x + y", &r).unwrap();
        assert_eq!(f.div_exact(&g).unwrap(), parse_poly("x", &r).unwrap());
        assert!(parse_poly("x^2 + 1", &r).unwrap().div_exact(&g).is_err());
    }

    #[test]
    fn exponent_overflow_is_a_resource_error() {
        let r = ring(2);
        let f = Polynomial::monomial(&r, &[u32::MAX, 0, 0]);
        assert!(matches!(f.try_mul(&Polynomial::var(&r, 0)), Err(Error::Resource(_))));
    }

    #[test]
    fn display_uses_symmetric_coefficients() {
        let r = ring(7);
        let f = parse_poly("x^2 + 6*y - 3", &r).unwrap();
        assert_eq!(f.to_string(), "x^2 - y - 3");
    }
}
