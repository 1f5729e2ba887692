//! Rational Weil divisors on the projective line and the dimensions of their section rings.
//!
//! Points are opaque labels; only their distinctness matters. On the line,
//! `dim H^0(O(nD)) = max(0, deg floor(nD) + 1)`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// `sum_i (p_i / q_i) V_i` with distinct labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDivisor {
    components: Vec<(String, Rational)>,
}

/// An integral divisor: labels with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerDivisor {
    pub components: Vec<(String, i64)>,
    pub degree: i64,
}

impl QDivisor {
    pub fn new<S: Into<String>>(components: impl IntoIterator<Item = (S, Rational)>) -> Result<Self> {
        let components: Vec<(String, Rational)> = components.into_iter().map(|(l, c)| (l.into(), c)).collect();
        let mut seen = BTreeSet::new();
        for (label, _) in &components {
            if !seen.insert(label.as_str()) {
                return Err(Error::usage(format!("point label {label} appears twice")));
            }
        }
        Ok(QDivisor { components })
    }

    /// Parses coefficients written as `"p/q"` or `"p"`.
    pub fn parse(components: &[(&str, &str)]) -> Result<Self> {
        let parsed = components
            .iter()
            .map(|(label, c)| parse_rational(c).map(|r| (label.to_string(), r)))
            .collect::<Result<Vec<_>>>()?;
        QDivisor::new(parsed)
    }

    pub fn components(&self) -> &[(String, Rational)] {
        &self.components
    }

    pub fn coefficient(&self, label: &str) -> Rational {
        self.components
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, c)| *c)
            .unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Rational {
        self.components.iter().map(|(_, c)| *c).sum()
    }

    pub fn is_ample(&self) -> bool {
        self.degree().is_positive()
    }

    fn require_ample(&self) -> Result<()> {
        if self.is_ample() {
            Ok(())
        } else {
            Err(Error::usage(format!(
                "divisor is not ample: deg D = {} <= 0",
                self.degree()
            )))
        }
    }

    /// Components with nonzero coefficient, sorted by label.
    fn support(&self) -> Vec<(String, Rational)> {
        let mut v: Vec<_> = self.components.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    /// Equality ignoring component order and zero components.
    pub fn same_as(&self, other: &QDivisor) -> bool {
        self.support() == other.support()
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support = self.support();
        if support.is_empty() {
            return write!(f, "0");
        }
        for (i, (label, c)) in support.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){label}")?;
        }
        Ok(())
    }
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::usage(format!("cannot read {text:?} as a rational number"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<i64>().map_err(|_| bad())?,
            d.trim().parse::<i64>().map_err(|_| bad())?,
        ),
        None => (text.parse::<i64>().map_err(|_| bad())?, 1),
    };
    if den == 0 {
        return Err(Error::usage(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Componentwise floor of `nD`.
pub fn floor_divisor(d: &QDivisor, n: i64) -> IntegerDivisor {
    let components: Vec<(String, i64)> = d
        .components
        .iter()
        .map(|(l, c)| (l.clone(), (*c * n).floor().to_integer()))
        .collect();
    let degree = components.iter().map(|(_, c)| c).sum();
    IntegerDivisor { components, degree }
}

/// `sum ((q_i - 1) / q_i) V_i` over the components with `q_i > 1`.
pub fn fractional_part(d: &QDivisor) -> QDivisor {
    QDivisor {
        components: d
            .components
            .iter()
            .filter(|(_, c)| *c.denom() > 1)
            .map(|(l, c)| (l.clone(), Rational::new(c.denom() - 1, *c.denom())))
            .collect(),
    }
}

pub fn section_dim(d: &QDivisor, n: i64) -> u64 {
    (floor_divisor(d, n).degree + 1).max(0) as u64
}

/// `dim H^0(nD)` for `n = 0..=bound`.
pub fn section_ring_profile(d: &QDivisor, bound: usize) -> Result<Vec<u64>> {
    d.require_ample()?;
    Ok((0..=bound as i64).map(|n| section_dim(d, n)).collect())
}

pub fn veronese_divisor(d: &QDivisor, n: i64) -> Result<QDivisor> {
    if n < 1 {
        return Err(Error::usage("Veronese index must be positive"));
    }
    Ok(QDivisor {
        components: d.components.iter().map(|(l, c)| (l.clone(), *c * n)).collect(),
    })
}

/// Whether the two divisors have the same fractional part.
pub fn same_fregularity_class(d1: &QDivisor, d2: &QDivisor) -> Result<bool> {
    d1.require_ample()?;
    d2.require_ample()?;
    Ok(fractional_part(d1).same_as(&fractional_part(d2)))
}

/// Least common multiple of the denominators.
pub fn denominator_lcm(d: &QDivisor) -> i64 {
    d.components.iter().fold(1, |acc, (_, c)| acc.lcm(c.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quotient_divisor() -> QDivisor {
        QDivisor::parse(&[("VS", "-1/2"), ("VT", "1/3"), ("VST", "1/5")]).unwrap()
    }

    fn positive_divisor() -> QDivisor {
        QDivisor::parse(&[("VS", "1/2"), ("VT", "1/3"), ("VST", "1/5")]).unwrap()
    }

    #[test]
    fn floors() {
        let f = floor_divisor(&quotient_divisor(), 1);
        assert_eq!(f.components.iter().map(|c| c.1).collect::<Vec<_>>(), vec![-1, 0, 0]);
        assert_eq!(f.degree, -1);
        let f = floor_divisor(&quotient_divisor(), 30);
        assert_eq!(f.components.iter().map(|c| c.1).collect::<Vec<_>>(), vec![-15, 10, 6]);
        assert_eq!(f.degree, 1);
        assert_eq!(floor_divisor(&quotient_divisor(), 0).degree, 0);
    }

    #[test]
    fn fractional_parts() {
        let expected = QDivisor::parse(&[("VS", "1/2"), ("VT", "2/3"), ("VST", "4/5")]).unwrap();
        assert!(fractional_part(&quotient_divisor()).same_as(&expected));
        let integral = QDivisor::parse(&[("P", "3"), ("Q", "-2")]).unwrap();
        assert!(fractional_part(&integral).components().is_empty());
        let seven = veronese_divisor(&quotient_divisor(), 7).unwrap();
        assert!(fractional_part(&seven).same_as(&expected));
    }

    #[test]
    fn section_dims() {
        for n in [6, 10, 15] {
            assert_eq!(section_dim(&quotient_divisor(), n), 1);
        }
        assert_eq!(section_dim(&quotient_divisor(), 1), 0);
        assert_eq!(section_dim(&quotient_divisor(), 30), 2);
    }

    #[test]
    fn profiles() {
        let p = section_ring_profile(&positive_divisor(), 8).unwrap();
        assert_eq!(p, vec![1, 1, 2, 3, 4, 5, 7, 7, 8]);
        let zero = QDivisor::parse(&[("P", "1/2"), ("Q", "-1/2")]).unwrap();
        assert!(matches!(section_ring_profile(&zero, 3), Err(Error::Usage(_))));
    }

    #[test]
    fn veronese() {
        let two = veronese_divisor(&quotient_divisor(), 2).unwrap();
        let expected = QDivisor::parse(&[("VS", "-1"), ("VT", "2/3"), ("VST", "2/5")]).unwrap();
        assert!(two.same_as(&expected));
        assert!(veronese_divisor(&quotient_divisor(), 1)
            .unwrap()
            .same_as(&quotient_divisor()));
        for n in 1..=12 {
            let v = veronese_divisor(&quotient_divisor(), n).unwrap();
            for m in 0..=12 {
                assert_eq!(section_dim(&v, m), section_dim(&quotient_divisor(), n * m));
            }
        }
    }

    #[test]
    fn fregularity_class() {
        let d = quotient_divisor();
        assert!(same_fregularity_class(&d, &veronese_divisor(&d, 7).unwrap()).unwrap());
        assert!(same_fregularity_class(&positive_divisor(), &d).unwrap());
        assert!(!same_fregularity_class(&d, &veronese_divisor(&d, 2).unwrap()).unwrap());
    }

    #[test]
    fn labels_distinct_and_rationals_reduced() {
        assert!(QDivisor::parse(&[("P", "1/2"), ("P", "1/3")]).is_err());
        let d = QDivisor::parse(&[("P", "2/-4")]).unwrap();
        assert_eq!(d.coefficient("P"), Rational::new(-1, 2));
        assert_eq!(*d.coefficient("P").denom(), 2);
        assert!(parse_rational("1/0").is_err());
        assert_eq!(denominator_lcm(&quotient_divisor()), 30);
    }
}
