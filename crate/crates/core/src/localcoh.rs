//! Classes in the top local cohomology module `H^d_m(R)`, written as Čech fractions
//! `[r / (x_1^{a_1} ... x_d^{a_d})]` over a homogeneous system of parameters.
//!
//! `H^d_m(R)` is the direct limit of `R / (x_1^t, ..., x_d^t)` under multiplication by
//! `x_1 ... x_d`, so a class vanishes exactly when some `r (x_1 ... x_d)^s` lies in
//! `(x_1^{a_1+s}, ..., x_d^{a_d+s})`.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{quotient_member, QuotientRing};
use crate::poly::Polynomial;

pub const DEFAULT_SEARCH_BOUND: u64 = 20;

#[derive(Clone, Debug)]
pub struct CechClass {
    ring: QuotientRing,
    sop: Vec<Polynomial>,
    numerator: Polynomial,
    exponents: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroTest {
    /// `r (x_1...x_d)^s` lies in the shifted parameter ideal; `witness` is the least such `s`.
    Zero { witness: u64 },
    /// No `s <= bound` works. Decisive when the ring is Cohen–Macaulay.
    NonzeroUpTo { bound: u64 },
}

impl ZeroTest {
    pub fn is_zero(self) -> bool {
        matches!(self, ZeroTest::Zero { .. })
    }
}

impl CechClass {
    pub fn new(ring: &QuotientRing, sop: Vec<Polynomial>, numerator: Polynomial, exponents: Vec<u64>) -> Result<Self> {
        if sop.is_empty() {
            return Err(Error::usage("system of parameters is empty"));
        }
        if sop.len() != exponents.len() {
            return Err(Error::usage(format!(
                "{} parameters but {} exponents",
                sop.len(),
                exponents.len()
            )));
        }
        if exponents.contains(&0) {
            return Err(Error::usage("denominator exponents must be positive"));
        }
        for x in &sop {
            match x.homogeneous_degree() {
                Some(d) if d > 0 => {}
                _ => {
                    return Err(Error::usage(format!(
                        "parameter {x} is not homogeneous of positive degree"
                    )))
                }
            }
        }
        Ok(CechClass {
            ring: ring.clone(),
            sop,
            numerator,
            exponents,
        })
    }

    /// Parses the parameters and numerator in the ambient ring of `ring`.
    pub fn parse<S: AsRef<str>>(ring: &QuotientRing, sop: &[S], numerator: &str, exponents: Vec<u64>) -> Result<Self> {
        let sop = ring.parse_polys(sop)?;
        let numerator = ring.parse_poly(numerator)?;
        CechClass::new(ring, sop, numerator, exponents)
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn sop(&self) -> &[Polynomial] {
        &self.sop
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// The same class with numerator `r x_1...x_d` and exponents `a_i + 1`.
    pub fn shifted(&self) -> Result<Self> {
        let mut numerator = self.numerator.clone();
        for x in &self.sop {
            numerator = numerator.try_mul(x)?;
        }
        Ok(CechClass {
            numerator,
            exponents: self.exponents.iter().map(|a| a + 1).collect(),
            ..self.clone()
        })
    }
}

impl fmt::Display for CechClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} / (", self.numerator)?;
        for (i, (x, a)) in self.sop.iter().zip(&self.exponents).enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let base = if x.len() > 1 { format!("({x})") } else { x.to_string() };
            if *a == 1 {
                write!(f, "{base}")?;
            } else {
                write!(f, "{base}^{a}")?;
            }
        }
        write!(f, ")]")
    }
}

/// `deg r - sum a_i deg x_i`.
pub fn class_degree(c: &CechClass) -> Result<i64> {
    let r = c
        .numerator
        .homogeneous_degree()
        .ok_or_else(|| Error::usage(format!("numerator {} is not homogeneous", c.numerator)))?;
    let denom: i64 = c
        .sop
        .iter()
        .zip(&c.exponents)
        .map(|(x, a)| x.homogeneous_degree().unwrap() as i64 * *a as i64)
        .sum();
    Ok(r as i64 - denom)
}

/// `e`-fold Frobenius: `[r^q / x^{qa}]` with `q = p^e`.
pub fn frobenius_class(c: &CechClass, e: u32) -> Result<CechClass> {
    if e == 0 {
        return Err(Error::usage("Frobenius iteration count must be at least 1"));
    }
    let q = c.ring.ambient().field().power_of_p(e)?;
    let exponents = c
        .exponents
        .iter()
        .map(|a| {
            a.checked_mul(q)
                .ok_or_else(|| Error::resource("Frobenius exponent overflows"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CechClass {
        numerator: c.numerator.frobenius(e)?,
        exponents,
        ..c.clone()
    })
}

fn dies_at_stage(c: &CechClass, s: u64) -> Result<bool> {
    let mut f = c.numerator.clone();
    let mut gens = Vec::with_capacity(c.sop.len());
    for (x, a) in c.sop.iter().zip(&c.exponents) {
        f = f.try_mul(&x.pow(s)?)?;
        gens.push(x.pow(a + s)?);
    }
    quotient_member(&f, &gens, &c.ring)
}

/// Searches `s = 0..=bound` for a stage at which the class dies.
pub fn is_zero_class(c: &CechClass, bound: u64) -> Result<ZeroTest> {
    for s in 0..=bound {
        if dies_at_stage(c, s)? {
            return Ok(ZeroTest::Zero { witness: s });
        }
    }
    Ok(ZeroTest::NonzeroUpTo { bound })
}

/// Checks that a claimed witness `s` kills the class.
pub fn verify_zero_witness(c: &CechClass, s: u64) -> Result<bool> {
    dies_at_stage(c, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::WeightedRing;

    fn e8() -> QuotientRing {
        let r = WeightedRing::new(2, &["x", "y", "z"], &[15, 10, 6]).unwrap();
        QuotientRing::parse(&r, &["x^2 + y^3 + z^5"]).unwrap()
    }

    fn class(num: &str, a: u64, b: u64) -> CechClass {
        CechClass::parse(&e8(), &["y", "z"], num, vec![a, b]).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(class_degree(&class("x", 1, 2)).unwrap(), -7);
        assert_eq!(class_degree(&class("1", 1, 1)).unwrap(), -16);
        assert_eq!(class_degree(&class("z^5", 1, 1)).unwrap(), 14);
        assert!(matches!(class_degree(&class("x + y", 1, 1)), Err(Error::Usage(_))));
    }

    #[test]
    fn frobenius_action() {
        let c = class("x", 1, 2);
        let f = frobenius_class(&c, 1).unwrap();
        assert_eq!(f.numerator().to_string(), "x^2");
        assert_eq!(f.exponents(), &[2, 4]);
        assert_eq!(class_degree(&f).unwrap(), -14);
        assert_eq!(frobenius_class(&c, 2).unwrap().exponents(), &[4, 8]);
        assert!(frobenius_class(&c, 0).is_err());
    }

    #[test]
    fn frobenius_kills_degree_minus_seven() {
        let f = frobenius_class(&class("x", 1, 2), 1).unwrap();
        assert!(is_zero_class(&f, DEFAULT_SEARCH_BOUND).unwrap().is_zero());
        assert!(verify_zero_witness(&f, 1).unwrap());
        assert!(!is_zero_class(&class("x", 1, 2), 20).unwrap().is_zero());
    }

    #[test]
    fn trivial_and_socle_classes() {
        assert_eq!(
            is_zero_class(&class("y", 1, 1), 5).unwrap(),
            ZeroTest::Zero { witness: 0 }
        );
        let socle = class("x y^2 z^4", 3, 5);
        assert_eq!(class_degree(&socle).unwrap(), -1);
        assert_eq!(is_zero_class(&socle, 20).unwrap(), ZeroTest::NonzeroUpTo { bound: 20 });
    }

    #[test]
    fn shifted_representative_agrees() {
        for c in [class("x", 1, 2), class("y", 1, 1), class("1", 2, 1)] {
            assert_eq!(
                is_zero_class(&c, 3).unwrap().is_zero(),
                is_zero_class(&c.shifted().unwrap(), 3).unwrap().is_zero()
            );
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(CechClass::parse(&e8(), &["y", "z"], "x", vec![1]).is_err());
        assert!(CechClass::parse(&e8(), &["y + z"], "x", vec![1]).is_err());
        assert!(CechClass::parse(&e8(), &["y"], "x", vec![0]).is_err());
    }
}
