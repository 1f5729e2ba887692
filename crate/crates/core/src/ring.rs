//! Weighted polynomial rings, monomials and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Weighted degree `sum e_i w_i`, or `None` on overflow.
    pub fn checked_degree(&self, weights: &[u32]) -> Option<u64> {
        self.0
            .iter()
            .zip(weights)
            .try_fold(0u64, |acc, (&e, &w)| acc.checked_add((e as u64).checked_mul(w as u64)?))
    }

    pub fn degree(&self, weights: &[u32]) -> u64 {
        self.checked_degree(weights).expect("weighted degree overflows u64")
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let v: Option<Vec<u32>> = self.0.iter().zip(&other.0).map(|(a, b)| a.checked_add(*b)).collect();
        v.map(Monomial)
    }

    pub fn checked_pow(&self, k: u64) -> Option<Monomial> {
        let k = u32::try_from(k).ok()?;
        let v: Option<Vec<u32>> = self.0.iter().map(|a| a.checked_mul(k)).collect();
        v.map(Monomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// How monomials are compared.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Weighted degree first, ties broken by reverse lex in declared variable order.
    #[default]
    WeightedGrevlex,
    /// Product order: the first `block` variables (compared by weighted grevlex among
    /// themselves) dominate; the remaining variables break ties the same way.
    Elimination { block: usize },
}

fn weighted_grevlex(a: &[u32], b: &[u32], w: &[u32]) -> Ordering {
    let da: u64 = a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
    let db: u64 = b.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                // smaller exponent in the last differing slot wins
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        match self {
            MonomialOrder::WeightedGrevlex => weighted_grevlex(&a.0, &b.0, weights),
            MonomialOrder::Elimination { block } => {
                let k = *block;
                weighted_grevlex(&a.0[..k], &b.0[..k], &weights[..k])
                    .then_with(|| weighted_grevlex(&a.0[k..], &b.0[k..], &weights[k..]))
            }
        }
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingInner {
    field: PrimeField,
    vars: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

/// `F_p[x_1, ..., x_n]` with positive integer weights and a monomial order.
///
/// Cheap to clone; all clones share one immutable description.
#[derive(Clone)]
pub struct WeightedRing(Arc<RingInner>);

impl PartialEq for WeightedRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for WeightedRing {}

impl fmt::Debug for WeightedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[", self.0.field.characteristic())?;
        for (i, (v, w)) in self.0.vars.iter().zip(&self.0.weights).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}:{w}")?;
        }
        write!(f, "]")?;
        if let MonomialOrder::Elimination { block } = self.0.order {
            write!(f, " elim({block})")?;
        }
        Ok(())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl WeightedRing {
    pub fn new<S: AsRef<str>>(p: u64, vars: &[S], weights: &[u32]) -> Result<Self> {
        Self::with_order(p, vars, weights, MonomialOrder::WeightedGrevlex)
    }

    /// Standard grading: every weight 1.
    pub fn standard<S: AsRef<str>>(p: u64, vars: &[S]) -> Result<Self> {
        Self::new(p, vars, &vec![1; vars.len()])
    }

    pub fn with_order<S: AsRef<str>>(p: u64, vars: &[S], weights: &[u32], order: MonomialOrder) -> Result<Self> {
        let field = PrimeField::new(p)?;
        Self::from_parts(
            field,
            vars.iter().map(|s| s.as_ref().to_string()).collect(),
            weights.to_vec(),
            order,
        )
    }

    pub(crate) fn from_parts(
        field: PrimeField,
        vars: Vec<String>,
        weights: Vec<u32>,
        order: MonomialOrder,
    ) -> Result<Self> {
        if vars.len() != weights.len() {
            return Err(Error::usage(format!(
                "{} variables but {} weights",
                vars.len(),
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().position(|&w| w == 0) {
            return Err(Error::usage(format!("weight of `{}` must be positive", vars[w])));
        }
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::usage(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::usage(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Elimination { block } = order {
            if block > vars.len() {
                return Err(Error::usage("elimination block larger than the variable set"));
            }
        }
        Ok(WeightedRing(Arc::new(RingInner {
            field,
            vars,
            weights,
            order,
        })))
    }

    pub fn field(&self) -> &PrimeField {
        &self.0.field
    }

    pub fn characteristic(&self) -> u32 {
        self.0.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.0.weights
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn degree(&self, m: &Monomial) -> u64 {
        m.degree(&self.0.weights)
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.order.compare(a, b, &self.0.weights)
    }

    /// Same variables and weights under a different order.
    pub fn reordered(&self, order: MonomialOrder) -> Result<Self> {
        Self::from_parts(self.0.field, self.0.vars.clone(), self.0.weights.clone(), order)
    }

    /// Same field, new variables and weights, default order.
    pub fn sibling<S: AsRef<str>>(&self, vars: &[S], weights: &[u32]) -> Result<Self> {
        Self::from_parts(
            self.0.field,
            vars.iter().map(|s| s.as_ref().to_string()).collect(),
            weights.to_vec(),
            MonomialOrder::WeightedGrevlex,
        )
    }

    /// Every monomial of weighted degree exactly `d`, in descending order.
    pub fn monomials_of_degree(&self, d: u64) -> Vec<Monomial> {
        fn rec(w: &[u32], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == w.len() {
                if left == 0 {
                    out.push(Monomial(cur.clone()));
                }
                return;
            }
            let wi = w[i] as u64;
            let mut e = 0u64;
            while e * wi <= left {
                cur.push(e as u32);
                rec(w, i + 1, left - e * wi, cur, out);
                cur.pop();
                e += 1;
            }
        }
        let mut out = Vec::new();
        rec(&self.0.weights, 0, d, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| self.cmp_monomials(b, a));
        out
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.0.vars.iter().zip(&m.0) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(weights: &[u32]) -> WeightedRing {
        WeightedRing::new(2, &["x", "y", "z"], weights).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_tie_break_picks_x_squared() {
        let r = ring(&[15, 10, 6]);
        let (x2, y3, z5) = (m(&[2, 0, 0]), m(&[0, 3, 0]), m(&[0, 0, 5]));
        assert_eq!(r.degree(&x2), 30);
        assert_eq!(r.degree(&y3), 30);
        assert_eq!(r.cmp_monomials(&x2, &y3), Ordering::Greater);
        assert_eq!(r.cmp_monomials(&y3, &z5), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let r =
            WeightedRing::with_order(5, &["u", "x", "y"], &[1, 1, 1], MonomialOrder::Elimination { block: 1 }).unwrap();
        assert_eq!(r.cmp_monomials(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(r.cmp_monomials(&m(&[1, 1, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn rejects_bad_rings() {
        assert!(WeightedRing::new(4, &["x"], &[1]).is_err());
        assert!(WeightedRing::new(2, &["x", "x"], &[1, 1]).is_err());
        assert!(WeightedRing::new(2, &["x"], &[0]).is_err());
        assert!(WeightedRing::new(2, &["x", "y"], &[1]).is_err());
        assert!(WeightedRing::new(2, &["2x"], &[1]).is_err());
    }

    #[test]
    fn monomials_of_degree_counts() {
        let r = ring(&[15, 10, 6]);
        assert!(r.monomials_of_degree(7).is_empty());
        assert_eq!(r.monomials_of_degree(30).len(), 3);
        let std = WeightedRing::standard(2, &["x", "y"]).unwrap();
        assert_eq!(std.monomials_of_degree(6).len(), 7);
    }
}
