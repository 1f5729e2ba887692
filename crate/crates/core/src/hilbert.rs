//! Hilbert series of graded quotients and what can be read off them: graded pieces of the
//! top local cohomology module, a-invariants, multiplicities and Veronese transforms.
//!
//! A series is stored as `N(t) / prod_i (1 - t^{w_i})` with an integer numerator. The top
//! local cohomology of a Cohen–Macaulay ring of dimension `d` is obtained by expanding the
//! same rational function around `t = infinity`, using
//! `1 / (1 - t^w) = -sum_{k >= 1} t^{-wk}`: `dim [H^d]_j = (-1)^d [t^j] H(t)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::{Ideal, QuotientRing};
use crate::ring::Monomial;

/// Default number of series coefficients reported.
pub const DEFAULT_TRUNCATION: usize = 120;

/// Integer polynomial in `t`, index = degree.
pub type Numerator = Vec<BigInt>;

fn trim(mut v: Numerator) -> Numerator {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn sub_shifted(a: &Numerator, b: &Numerator, shift: usize) -> Numerator {
    let len = a.len().max(b.len() + shift);
    let mut out = vec![BigInt::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + shift] -= c;
    }
    trim(out)
}

fn mul_one_minus_t_pow(a: &Numerator, w: usize) -> Numerator {
    sub_shifted(a, a, w)
}

/// `prod (1 - t^{d_i})`.
pub fn complete_intersection_numerator(degrees: &[u64]) -> Numerator {
    degrees
        .iter()
        .fold(vec![BigInt::one()], |acc, &d| mul_one_minus_t_pow(&acc, d as usize))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn numerator_rec(gens: Vec<Monomial>, weights: &[u32]) -> Numerator {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let degs: Vec<u64> = gens.iter().map(|g| g.degree(weights)).collect();
        return complete_intersection_numerator(&degs);
    }
    // N(I) = N(I') - t^{deg g} N(I' : g) with I' = I minus the pivot g
    let mut rest = gens;
    let g = rest.pop().unwrap();
    let colon: Vec<Monomial> = rest.iter().map(|m| g.gcd(m).quotient_of(m).unwrap()).collect();
    let a = numerator_rec(rest, weights);
    let b = numerator_rec(colon, weights);
    sub_shifted(&a, &b, g.degree(weights) as usize)
}

/// Hilbert numerator of `S / (monomials)` with respect to `weights`.
pub fn monomial_numerator(monomials: &[Monomial], weights: &[u32]) -> Numerator {
    numerator_rec(monomials.to_vec(), weights)
}

/// Hilbert numerator of `S / I` for an ideal generated by monomials.
pub fn monomial_ideal_numerator(ideal: &Ideal) -> Result<Numerator> {
    if !ideal.is_monomial() {
        return Err(Error::usage("monomial_numerator needs an ideal generated by monomials"));
    }
    let monos: Vec<Monomial> = ideal
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.lead_monomial().unwrap().clone())
        .collect();
    Ok(monomial_numerator(&monos, ideal.ring().weights()))
}

/// `N(t) / prod (1 - t^{w_i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Numerator,
    weights: Vec<u32>,
}

impl HilbertSeries {
    pub fn new(numerator: Numerator, weights: Vec<u32>) -> Self {
        HilbertSeries {
            numerator: trim(numerator),
            weights,
        }
    }

    /// Series of a standard-graded ring from an initial segment of its Hilbert function.
    ///
    /// Multiplies by `(1 - t)^d` and requires at least `d` vanishing trailing coefficients,
    /// i.e. that the function has visibly become polynomial of degree `< d` before the end
    /// of `values`. This is evidence, not proof, of stabilization.
    pub fn from_hilbert_function(values: &[u64], d: usize) -> Result<Self> {
        let mut n: Numerator = values.iter().map(|&v| BigInt::from(v)).collect();
        for _ in 0..d {
            let len = n.len();
            let shifted = sub_shifted(&n, &n, 1);
            n = shifted.into_iter().take(len).collect();
            n.resize(len, BigInt::zero());
        }
        let len = n.len();
        let n = trim(n);
        if len < n.len() + d || n.is_empty() {
            return Err(Error::usage(format!(
                "Hilbert function has not stabilized within {len} values for dimension {d}"
            )));
        }
        Ok(HilbertSeries::new(n, vec![1; d]))
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    fn weight_sum(&self) -> i64 {
        self.weights.iter().map(|&w| w as i64).sum()
    }

    /// First `n` coefficients of the power series expansion at `t = 0`.
    pub fn coefficients(&self, n: usize) -> Vec<BigInt> {
        let mut s: Vec<BigInt> = (0..n)
            .map(|i| self.numerator.get(i).cloned().unwrap_or_default())
            .collect();
        for &w in &self.weights {
            let w = w as usize;
            for i in w..n {
                let prev = s[i - w].clone();
                s[i] += prev;
            }
        }
        s
    }

    /// Order of the pole at `t = 1` (the Krull dimension of the ring).
    pub fn pole_order(&self) -> usize {
        let mut n = self.numerator.clone();
        let mut vanishing = 0;
        while !n.is_empty() && n.iter().sum::<BigInt>().is_zero() {
            n = divide_by_one_minus_t(&n);
            vanishing += 1;
        }
        self.weights.len() - vanishing.min(self.weights.len())
    }

    /// Degree of the rational function, `deg N - sum w_i`. `None` for the zero series.
    pub fn rational_degree(&self) -> Option<i64> {
        if self.numerator.is_empty() {
            None
        } else {
            Some(self.numerator.len() as i64 - 1 - self.weight_sum())
        }
    }

    fn check_dimension(&self, d: usize) -> Result<()> {
        let pole = self.pole_order();
        if pole != d {
            return Err(Error::usage(format!(
                "series has a pole of order {pole} at t = 1, but dimension {d} was asserted"
            )));
        }
        Ok(())
    }
}

fn divide_by_one_minus_t(n: &Numerator) -> Numerator {
    // n = (1 - t) q  =>  q_i = sum_{k <= i} n_k
    let mut q = Vec::with_capacity(n.len());
    let mut acc = BigInt::zero();
    for c in &n[..n.len().saturating_sub(1)] {
        acc += c;
        q.push(acc.clone());
    }
    trim(q)
}

fn format_numerator(n: &Numerator) -> String {
    if n.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in n.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mono = match i {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{i}"),
        };
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    out
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = format_numerator(&self.numerator);
        if self.weights.is_empty() {
            return write!(f, "{num}");
        }
        let terms = self.numerator.iter().filter(|c| !c.is_zero()).count();
        if terms > 1 {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        write!(f, "/(")?;
        for w in &self.weights {
            if *w == 1 {
                write!(f, "(1 - t)")?;
            } else {
                write!(f, "(1 - t^{w})")?;
            }
        }
        write!(f, ")")
    }
}

/// Hilbert series of a graded quotient, from the initial ideal of its relations.
pub fn hilbert_series(q: &QuotientRing) -> Result<HilbertSeries> {
    let rel = q.relations();
    if !rel.is_homogeneous() {
        return Err(Error::usage("hilbert_series needs homogeneous relations"));
    }
    let weights = q.ambient().weights().to_vec();
    let leads = rel.leading_monomials();
    let pairwise_coprime = leads
        .iter()
        .enumerate()
        .all(|(i, a)| leads[i + 1..].iter().all(|b| a.is_coprime(b)));
    let numerator = if pairwise_coprime {
        let degs: Vec<u64> = rel
            .basis()
            .iter()
            .map(|g| {
                g.homogeneous_degree()
                    .expect("basis of a homogeneous ideal is homogeneous")
            })
            .collect();
        complete_intersection_numerator(&degs)
    } else {
        monomial_numerator(&leads, &weights)
    };
    Ok(HilbertSeries::new(numerator, weights))
}

/// `dim_K [H^d_m(R)]_j` for `j_min <= j`, read off the series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCohomologyTable {
    pub dimension: usize,
    pub j_min: i64,
    pub dims: BTreeMap<i64, BigInt>,
}

impl LocalCohomologyTable {
    pub fn get(&self, j: i64) -> BigInt {
        if j < self.j_min {
            panic!("degree {j} is below the table cutoff {}", self.j_min);
        }
        self.dims.get(&j).cloned().unwrap_or_default()
    }

    /// Largest degree with a nonzero entry.
    pub fn a_invariant(&self) -> Option<i64> {
        self.dims.iter().rev().find(|(_, v)| !v.is_zero()).map(|(j, _)| *j)
    }
}

/// Number of solutions of `sum w_i e_i = m` for `m = 0..=max`.
fn partition_counts(weights: &[u32], max: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); max + 1];
    p[0] = BigInt::one();
    for &w in weights {
        let w = w as usize;
        for m in w..=max {
            let prev = p[m - w].clone();
            p[m] += prev;
        }
    }
    p
}

/// Graded dimensions of the top local cohomology of a Cohen–Macaulay ring of dimension `d`
/// (caller-asserted) in degrees `j_min..`.
pub fn hd_graded_dims(h: &HilbertSeries, d: usize, j_min: i64) -> Result<LocalCohomologyTable> {
    h.check_dimension(d)?;
    let mut dims = BTreeMap::new();
    if let Some(top) = h.rational_degree() {
        let wsum = h.weight_sum();
        let n = h.weights.len();
        let sign: i64 = if (n + d).is_multiple_of(2) { 1 } else { -1 };
        let max_m = (h.numerator.len() as i64 - 1 - wsum - j_min).max(0) as usize;
        let p = partition_counts(&h.weights, max_m);
        let mut j = top;
        while j >= j_min {
            // [t^j] H = (-1)^n sum_k c_k P(k - D - j)
            let mut acc = BigInt::zero();
            for (k, c) in h.numerator.iter().enumerate() {
                let m = k as i64 - wsum - j;
                if m >= 0 && !c.is_zero() {
                    acc += c * &p[m as usize];
                }
            }
            dims.insert(j, acc * sign);
            j -= 1;
        }
    }
    Ok(LocalCohomologyTable {
        dimension: d,
        j_min,
        dims,
    })
}

/// a-invariant of a Cohen–Macaulay graded quotient: the degree of its Hilbert series.
pub fn a_invariant(q: &QuotientRing) -> Result<i64> {
    hilbert_series(q)?
        .rational_degree()
        .ok_or_else(|| Error::domain("the zero ring has no a-invariant"))
}

/// `lim_{t -> 1} (1 - t)^d H(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicity {
    pub value: BigRational,
    /// Set when some weight differs from 1; `value` is then the normalized limit.
    pub weighted: bool,
}

pub fn multiplicity(h: &HilbertSeries, d: usize) -> Result<Multiplicity> {
    h.check_dimension(d)?;
    let mut n = h.numerator.clone();
    for _ in 0..h.weights.len() - d {
        n = divide_by_one_minus_t(&n);
    }
    let at_one: BigInt = n.iter().sum();
    let denom: BigInt = h.weights.iter().map(|&w| BigInt::from(w)).product();
    Ok(Multiplicity {
        value: BigRational::new(at_one, denom),
        weighted: h.weights.iter().any(|&w| w != 1),
    })
}

/// Hilbert function and a-invariant of the Veronese subring `R^(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeroneseSeries {
    pub n: u64,
    /// `dim R_{in}` for `i = 0..=truncation`.
    pub stream: Vec<BigInt>,
    pub a_invariant: Option<i64>,
}

/// `R^(n)` from the series of `R`. The a-invariant is selected from the local cohomology
/// table of `R` (degrees divisible by `n`), which presumes `R` Cohen–Macaulay.
pub fn veronese_series(h: &HilbertSeries, n: u64, truncation: usize) -> Result<VeroneseSeries> {
    if n == 0 {
        return Err(Error::usage("Veronese index must be positive"));
    }
    let n_us = n as usize;
    let coeffs = h.coefficients(truncation * n_us + 1);
    let stream = (0..=truncation).map(|i| coeffs[i * n_us].clone()).collect();
    let d = h.pole_order();
    let a_invariant = match h.rational_degree() {
        None => None,
        Some(top) => {
            let window = n as i64 * (h.weight_sum() + h.numerator.len() as i64 + 60);
            let table = hd_graded_dims(h, d, top - window)?;
            table
                .dims
                .iter()
                .rev()
                .find(|(j, v)| *j % n as i64 == 0 && !v.is_zero())
                .map(|(j, _)| j / n as i64)
        }
    };
    Ok(VeroneseSeries { n, stream, a_invariant })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::WeightedRing;

    fn big(v: &[i64]) -> Numerator {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn monomial_numerator_examples() {
        assert_eq!(monomial_numerator(&[m(&[2])], &[1]), big(&[1, 0, -1]));
        assert_eq!(monomial_numerator(&[m(&[1, 0]), m(&[0, 1])], &[1, 1]), big(&[1, -2, 1]));
        assert_eq!(
            monomial_numerator(&[m(&[2, 0]), m(&[1, 1])], &[1, 1]),
            big(&[1, 0, -2, 1])
        );
        assert!(monomial_numerator(&[m(&[0, 0])], &[1, 1]).is_empty());
    }

    #[test]
    fn non_monomial_ideal_rejected() {
        let r = WeightedRing::standard(5, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x + y"]).unwrap();
        assert!(matches!(monomial_ideal_numerator(&i), Err(Error::Usage(_))));
    }

    fn e8() -> QuotientRing {
        let r = WeightedRing::new(2, &["x", "y", "z"], &[15, 10, 6]).unwrap();
        QuotientRing::parse(&r, &["x^2 + y^3 + z^5"]).unwrap()
    }

    #[test]
    fn e8_series_and_a_invariant() {
        let h = hilbert_series(&e8()).unwrap();
        assert_eq!(h.to_string(), "(1 - t^30)/((1 - t^15)(1 - t^10)(1 - t^6))");
        assert_eq!(h.pole_order(), 2);
        assert_eq!(a_invariant(&e8()).unwrap(), -1);
        let table = hd_graded_dims(&h, 2, -20).unwrap();
        assert_eq!(table.a_invariant(), Some(-1));
        assert_eq!(table.get(-7), BigInt::one());
        assert_eq!(table.get(0), BigInt::zero());
        assert!(matches!(hd_graded_dims(&h, 3, -5), Err(Error::Usage(_))));
    }

    #[test]
    fn polynomial_ring_series() {
        let r = WeightedRing::standard(3, &["a", "b", "c"]).unwrap();
        let q = QuotientRing::polynomial_ring(&r);
        let h = hilbert_series(&q).unwrap();
        assert_eq!(h.coefficients(5), big(&[1, 3, 6, 10, 15]));
        assert_eq!(a_invariant(&q).unwrap(), -3);
        let e = multiplicity(&h, 3).unwrap();
        assert_eq!(e.value, BigRational::one());
        assert!(!e.weighted);
    }

    #[test]
    fn k_x_local_cohomology() {
        let h = HilbertSeries::new(big(&[1]), vec![1]);
        let t = hd_graded_dims(&h, 1, -10).unwrap();
        for j in -10..=-1 {
            assert_eq!(t.get(j), BigInt::one());
        }
        assert_eq!(t.get(0), BigInt::zero());
        assert_eq!(t.a_invariant(), Some(-1));
    }

    #[test]
    fn hypersurface_multiplicity_is_degree() {
        let h = HilbertSeries::new(complete_intersection_numerator(&[4]), vec![1, 1, 1]);
        assert_eq!(multiplicity(&h, 2).unwrap().value, BigRational::from_integer(4.into()));
    }

    #[test]
    fn weighted_multiplicity_is_flagged() {
        let h = hilbert_series(&e8()).unwrap();
        let e = multiplicity(&h, 2).unwrap();
        assert!(e.weighted);
        // 30 / (15 * 10 * 6)
        assert_eq!(e.value, BigRational::new(1.into(), 30.into()));
    }

    #[test]
    fn veronese_examples() {
        let h = HilbertSeries::new(big(&[1]), vec![1, 1]);
        let v = veronese_series(&h, 2, 4).unwrap();
        assert_eq!(v.stream, big(&[1, 3, 5, 7, 9]));
        let h = hilbert_series(&e8()).unwrap();
        assert_eq!(veronese_series(&h, 2, 3).unwrap().a_invariant, Some(-8));
        let v7 = veronese_series(&h, 7, 3).unwrap();
        assert_eq!(v7.a_invariant, Some(-1));
        assert_eq!(veronese_series(&h, 1, 10).unwrap().a_invariant, Some(-1));
    }

    #[test]
    fn from_hilbert_function_recovers_numerator() {
        let values: Vec<u64> = (0..12).map(|n| (7 * n * n + 3 * n + 2) / 2).collect();
        let h = HilbertSeries::from_hilbert_function(&values, 3).unwrap();
        assert_eq!(
            h.coefficients(12).iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            values.iter().map(|v| v.to_string()).collect::<Vec<_>>()
        );
        assert_eq!(multiplicity(&h, 3).unwrap().value, BigRational::from_integer(7.into()));
        assert!(HilbertSeries::from_hilbert_function(&[1, 2, 4, 8, 16], 2).is_err());
    }
}
