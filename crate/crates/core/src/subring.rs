//! Graded subalgebras of graded quotient rings, handled degree by degree with linear algebra
//! over the prime field.
//!
//! The degree-`n` piece of `A = K[g_1, ..., g_m]` is spanned by the products `g_i b` with
//! `b` running over a basis of `A_{n - deg g_i}`; everything is kept as normal forms in the
//! ambient quotient, so linear dependence is detected coefficientwise.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::{buchberger_with_budget, Ideal, QuotientRing, StepBudget};
use crate::poly::Polynomial;
use crate::ring::{Monomial, MonomialOrder, WeightedRing};

/// Default cap on the number of products formed for one graded piece.
pub const DEFAULT_WORD_CAP: u64 = 1_000_000;
/// Default cap on the generator count accepted by [`subring_presentation`].
pub const DEFAULT_PRESENTATION_GENERATORS: usize = 8;

/// Row-reduced span of polynomials: each row is monic, its leading monomial is its pivot,
/// and no pivot occurs in any other row.
#[derive(Clone, Debug)]
pub struct LinearSpan {
    ring: WeightedRing,
    rows: Vec<Polynomial>,
    pivots: HashMap<Monomial, usize>,
}

impl LinearSpan {
    pub fn new(ring: &WeightedRing) -> Self {
        LinearSpan {
            ring: ring.clone(),
            rows: Vec::new(),
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Polynomial] {
        &self.rows
    }

    /// Remainder of `v` after clearing every pivot monomial.
    pub fn reduce(&self, v: &Polynomial) -> Result<Polynomial> {
        let field = *self.ring.field();
        let mut v = v.clone();
        let mut idx = 0;
        while idx < v.len() {
            let (m, c) = v.terms()[idx].clone();
            match self.pivots.get(&m) {
                // rows are monic with lead m, so every other term of the row sorts after m
                Some(&r) => v = v.add_scaled_shifted(field.neg(c), &Monomial::one(self.ring.nvars()), &self.rows[r])?,
                None => idx += 1,
            }
        }
        Ok(v)
    }

    pub fn contains(&self, v: &Polynomial) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &Polynomial) -> Result<bool> {
        let r = self.reduce(v)?;
        if r.is_zero() {
            return Ok(false);
        }
        let r = r.monic();
        let lead = r.lead_monomial().unwrap().clone();
        let field = *self.ring.field();
        let one = Monomial::one(self.ring.nvars());
        for row in &mut self.rows {
            let c = row.coeff(&lead);
            if !c.is_zero() {
                *row = row.add_scaled_shifted(field.neg(c), &one, &r)?;
            }
        }
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(r);
        Ok(true)
    }

    /// Rows sorted by descending pivot, for reproducible output.
    pub fn sorted_rows(&self) -> Vec<Polynomial> {
        let mut rows = self.rows.clone();
        rows.sort_by(|a, b| {
            self.ring
                .cmp_monomials(b.lead_monomial().unwrap(), a.lead_monomial().unwrap())
        });
        rows
    }
}

/// Basis of one graded piece of a subalgebra.
#[derive(Clone, Debug)]
pub struct GradedPieceBasis {
    pub degree: u64,
    pub basis: Vec<Polynomial>,
}

impl GradedPieceBasis {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// `K[g_1, ..., g_m]` inside a graded quotient. An element of internal degree `n` has
/// ambient degree `n * unit`.
#[derive(Clone, Debug)]
pub struct GradedSubalgebra {
    ambient: QuotientRing,
    generators: Vec<Polynomial>,
    degrees: Vec<u64>,
    unit: u64,
    word_cap: u64,
}

impl GradedSubalgebra {
    pub fn new(ambient: &QuotientRing, generators: Vec<Polynomial>, unit: u64) -> Result<Self> {
        if unit == 0 {
            return Err(Error::usage("grading unit must be positive"));
        }
        let mut reduced = Vec::with_capacity(generators.len());
        let mut degrees = Vec::with_capacity(generators.len());
        for g in generators {
            let d = g
                .homogeneous_degree()
                .ok_or_else(|| Error::usage(format!("generator {g} is not homogeneous")))?;
            if d == 0 || d % unit != 0 {
                return Err(Error::usage(format!(
                    "generator {g} has degree {d}, not a positive multiple of {unit}"
                )));
            }
            degrees.push(d / unit);
            reduced.push(ambient.reduce(&g)?);
        }
        Ok(GradedSubalgebra {
            ambient: ambient.clone(),
            generators: reduced,
            degrees,
            unit,
            word_cap: DEFAULT_WORD_CAP,
        })
    }

    pub fn parse<S: AsRef<str>>(ambient: &QuotientRing, generators: &[S], unit: u64) -> Result<Self> {
        let gens = ambient.parse_polys(generators)?;
        GradedSubalgebra::new(ambient, gens, unit)
    }

    pub fn with_word_cap(mut self, cap: u64) -> Self {
        self.word_cap = cap;
        self
    }

    pub fn ambient(&self) -> &QuotientRing {
        &self.ambient
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Internal degrees of the generators.
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn unit(&self) -> u64 {
        self.unit
    }

    /// Internal degree of a homogeneous ambient element.
    pub fn internal_degree(&self, f: &Polynomial) -> Result<u64> {
        let d = f
            .homogeneous_degree()
            .ok_or_else(|| Error::usage(format!("{f} is not homogeneous")))?;
        if d % self.unit != 0 {
            return Err(Error::usage(format!(
                "{f} has degree {d}, not a multiple of {}",
                self.unit
            )));
        }
        Ok(d / self.unit)
    }

    /// Bases of `A_0, ..., A_n`.
    pub fn pieces(&self, n: u64) -> Result<Vec<GradedPieceBasis>> {
        let ring = self.ambient.ambient();
        let mut out: Vec<GradedPieceBasis> = Vec::with_capacity(n as usize + 1);
        out.push(GradedPieceBasis {
            degree: 0,
            basis: vec![Polynomial::one(ring)],
        });
        for deg in 1..=n {
            let words: u64 = self
                .degrees
                .iter()
                .filter(|&&d| d <= deg)
                .map(|&d| out[(deg - d) as usize].rank() as u64)
                .sum();
            if words > self.word_cap {
                return Err(Error::resource(format!(
                    "degree {deg} needs {words} products, above the cap of {}",
                    self.word_cap
                )));
            }
            let mut span = LinearSpan::new(ring);
            for (g, &d) in self.generators.iter().zip(&self.degrees) {
                if d > deg {
                    continue;
                }
                for b in &out[(deg - d) as usize].basis {
                    span.insert(&self.ambient.reduce(&g.try_mul(b)?)?)?;
                }
            }
            out.push(GradedPieceBasis {
                degree: deg,
                basis: span.sorted_rows(),
            });
        }
        Ok(out)
    }
}

pub fn graded_piece_dim(a: &GradedSubalgebra, n: u64) -> Result<GradedPieceBasis> {
    Ok(a.pieces(n)?.pop().unwrap())
}

/// `dim A_n` for `n = 0..=bound`.
pub fn subring_hilbert_function(a: &GradedSubalgebra, bound: u64) -> Result<Vec<u64>> {
    Ok(a.pieces(bound)?.iter().map(|p| p.rank() as u64).collect())
}

/// Whether `x` (in `A`, internal degree `n`) lies in the ideal of `A` generated by `ideal`.
pub fn subring_ideal_member_graded(a: &GradedSubalgebra, x: &Polynomial, ideal: &[Polynomial], n: u64) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    if a.internal_degree(x)? != n {
        return Err(Error::usage(format!("{x} does not have internal degree {n}")));
    }
    let pieces = a.pieces(n)?;
    let ring = a.ambient.ambient();
    let mut span = LinearSpan::new(ring);
    for g in ideal {
        if g.is_zero() {
            continue;
        }
        let e = a.internal_degree(g)?;
        if e > n {
            continue;
        }
        for b in &pieces[(n - e) as usize].basis {
            span.insert(&a.ambient.reduce(&g.try_mul(b)?)?)?;
        }
    }
    span.contains(&a.ambient.reduce(x)?)
}

/// Monomials of degree `d` that are not leading monomials of the relations: a basis of `R_d`.
pub fn quotient_basis(q: &QuotientRing, d: u64) -> Vec<Monomial> {
    let leads = q.relations().leading_monomials();
    q.ambient()
        .monomials_of_degree(d)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .collect()
}

/// Whether `R^(n)` is generated by `R_n`, checked in internal degrees `2..=bound`.
pub fn equal_degree_generation_check(q: &QuotientRing, n: u64, bound: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::usage("Veronese index must be positive"));
    }
    let ring = q.ambient();
    let gens = quotient_basis(q, n)
        .into_iter()
        .map(|m| Polynomial::term(ring, m, FieldElement::ONE))
        .collect();
    let a = GradedSubalgebra::new(q, gens, n)?;
    let pieces = a.pieces(bound)?;
    for i in 2..=bound {
        if pieces[i as usize].rank() != quotient_basis(q, i * n).len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Monomials of degree divisible by `n` that are not divisible by another such monomial;
/// their images generate `R^(n)`. Generators whose normal form vanishes are dropped.
pub fn veronese_generators(q: &QuotientRing, n: u64) -> Result<Vec<Polynomial>> {
    if n == 0 {
        return Err(Error::usage("Veronese index must be positive"));
    }
    let ring = q.ambient();
    let w = ring.weights();
    let nv = ring.nvars();
    // a minimal generator other than x_i^n has every exponent below n
    let mut candidates: Vec<Monomial> = Vec::new();
    let mut e = vec![0u32; nv];
    loop {
        let m = Monomial::from_exponents(e.clone());
        if !m.is_one() && m.degree(w).is_multiple_of(n) {
            candidates.push(m);
        }
        let mut i = 0;
        while i < nv {
            e[i] += 1;
            if e[i] as u64 <= n {
                break;
            }
            e[i] = 0;
            i += 1;
        }
        if i == nv {
            break;
        }
    }
    candidates.sort_by_key(|m| m.degree(w));
    let mut minimal: Vec<Monomial> = Vec::new();
    for m in candidates {
        if !minimal.iter().any(|g| g.divides(&m)) {
            minimal.push(m);
        }
    }
    minimal.sort_by(|a, b| a.degree(w).cmp(&b.degree(w)).then(ring.cmp_monomials(b, a)));
    let mut out = Vec::new();
    for m in minimal {
        let g = Polynomial::term(ring, m, FieldElement::ONE);
        if !q.reduce(&g)?.is_zero() {
            out.push(g);
        }
    }
    Ok(out)
}

/// Relations among the generators: the kernel of `K[y_1, ..., y_m] -> A`, `y_i -> g_i`,
/// with `deg y_i` the internal degree of `g_i`.
pub fn subring_presentation<S: AsRef<str>>(
    a: &GradedSubalgebra,
    symbols: &[S],
    budget: &mut StepBudget,
) -> Result<Ideal> {
    let m = a.generators.len();
    if m > DEFAULT_PRESENTATION_GENERATORS {
        return Err(Error::usage(format!(
            "presentation is limited to {DEFAULT_PRESENTATION_GENERATORS} generators, got {m}"
        )));
    }
    if symbols.len() != m {
        return Err(Error::usage(format!("{m} generators but {} symbols", symbols.len())));
    }
    let ring = a.ambient.ambient();
    let target = WeightedRing::from_parts(
        *ring.field(),
        symbols.iter().map(|s| s.as_ref().to_string()).collect(),
        a.degrees.iter().map(|&d| d as u32).collect(),
        MonomialOrder::WeightedGrevlex,
    )?;
    let n = ring.nvars();
    let mut names: Vec<String> = ring.var_names().to_vec();
    for s in symbols {
        let mut name = s.as_ref().to_string();
        while names.contains(&name) {
            name.push('_');
        }
        names.push(name);
    }
    let mut weights = ring.weights().to_vec();
    for g in &a.generators {
        weights.push(g.homogeneous_degree().unwrap() as u32);
    }
    let graph = WeightedRing::from_parts(*ring.field(), names, weights, MonomialOrder::Elimination { block: n })?;
    let front: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Polynomial> = a
        .ambient
        .relations()
        .basis()
        .iter()
        .map(|r| r.remap(&graph, &front))
        .collect();
    for (i, g) in a.generators.iter().enumerate() {
        let y = Polynomial::var(&graph, n + i);
        gens.push(y.try_sub(&g.remap(&graph, &front))?);
    }
    let basis = buchberger_with_budget(&gens, &graph, budget)?;
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|g| (0..n).all(|i| g.max_exponent(i) == 0))
        .map(|g| {
            Polynomial::from_terms(
                &target,
                g.terms()
                    .iter()
                    .map(|(mono, c)| (Monomial::from_exponents(mono.exponents()[n..].to_vec()), *c)),
            )
        })
        .collect();
    Ideal::new(&target, kept)
}

/// Evaluates a polynomial in the generator symbols at the generators, in the ambient quotient.
pub fn evaluate_at_generators(a: &GradedSubalgebra, f: &Polynomial) -> Result<Polynomial> {
    let ring = a.ambient.ambient();
    let mut acc = Polynomial::zero(ring);
    for (mono, c) in f.terms() {
        let mut t = Polynomial::term(ring, Monomial::one(ring.nvars()), *c);
        for (g, &e) in a.generators.iter().zip(mono.exponents()) {
            if e > 0 {
                t = t.try_mul(&g.pow(e as u64)?)?;
            }
        }
        acc = acc.try_add(&t)?;
    }
    a.ambient.reduce(&acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::QuotientRing;

    fn sxtx(p: u64) -> QuotientRing {
        let r = WeightedRing::standard(p, &["s", "t", "x1", "x2", "x3"]).unwrap();
        QuotientRing::parse(&r, &["s*x1*x2*x3 - t*(x1^3 + x2^3 + x3^3)"]).unwrap()
    }

    fn sxtx_subring(p: u64) -> GradedSubalgebra {
        GradedSubalgebra::parse(&sxtx(p), &["s*x1", "s*x2", "s*x3", "t*x1", "t*x2", "t*x3"], 2).unwrap()
    }

    #[test]
    fn sxtx_hilbert_function() {
        let hf = subring_hilbert_function(&sxtx_subring(2), 4).unwrap();
        assert_eq!(hf, vec![1, 6, 18, 37, 63]);
    }

    #[test]
    fn sxtx_memberships() {
        let a = sxtx_subring(2);
        let q = a.ambient().clone();
        let ideal = q.parse_polys(&["s*x1", "s*x2", "t*x1", "t*x2"]).unwrap();
        let tx3 = q.parse_poly("t*x3").unwrap();
        assert!(!subring_ideal_member_graded(&a, &tx3.pow(2).unwrap(), &ideal, 2).unwrap());
        let sq = crate::groebner::power_products(&ideal, 2).unwrap();
        assert!(subring_ideal_member_graded(&a, &tx3.pow(6).unwrap(), &sq, 6).unwrap());
        assert!(subring_ideal_member_graded(&a, &ideal[0], &ideal, 1).unwrap());
    }

    #[test]
    fn cubic_veronese_of_plane() {
        let r = WeightedRing::standard(5, &["x", "y"]).unwrap();
        let q = QuotientRing::polynomial_ring(&r);
        let gens = veronese_generators(&q, 3).unwrap();
        assert_eq!(gens.len(), 4);
        let a = GradedSubalgebra::new(&q, gens, 3).unwrap();
        assert_eq!(graded_piece_dim(&a, 2).unwrap().rank(), 7);
        let rel = subring_presentation(&a, &["a", "b", "c", "d"], &mut StepBudget::default()).unwrap();
        assert_eq!(rel.basis().len(), 3);
        for g in rel.basis() {
            assert_eq!(g.homogeneous_degree(), Some(2));
            assert!(evaluate_at_generators(&a, g).unwrap().is_zero());
        }
    }

    #[test]
    fn presentation_of_free_subring_is_zero() {
        let r = WeightedRing::standard(3, &["x"]).unwrap();
        let q = QuotientRing::polynomial_ring(&r);
        let a = GradedSubalgebra::parse(&q, &["x^2"], 2).unwrap();
        let rel = subring_presentation(&a, &["y"], &mut StepBudget::default()).unwrap();
        assert!(rel.is_zero());
    }

    #[test]
    fn equal_degree_checks() {
        let r = WeightedRing::new(2, &["x", "y", "z"], &[15, 10, 6]).unwrap();
        let q = QuotientRing::parse(&r, &["x^2 + y^3 + z^5"]).unwrap();
        assert!(equal_degree_generation_check(&q, 30, 4).unwrap());
        assert!(!equal_degree_generation_check(&q, 7, 4).unwrap());
        let plane = QuotientRing::polynomial_ring(&WeightedRing::standard(2, &["x", "y"]).unwrap());
        for n in 1..=4 {
            assert!(equal_degree_generation_check(&plane, n, 4).unwrap());
        }
    }

    #[test]
    fn word_cap_is_a_resource_error() {
        let a = sxtx_subring(2).with_word_cap(10);
        assert!(matches!(subring_hilbert_function(&a, 3), Err(Error::Resource(_))));
    }

    #[test]
    fn rejects_bad_generators() {
        let q = sxtx(2);
        assert!(GradedSubalgebra::parse(&q, &["s + t*x1"], 1).is_err());
        assert!(GradedSubalgebra::parse(&q, &["s"], 2).is_err());
    }
}
