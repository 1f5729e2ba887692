//! Buchberger's algorithm, normal forms and the ideal operations built on them.

use std::collections::HashSet;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::parse::parse_polys;
use crate::poly::Polynomial;
use crate::ring::{Monomial, MonomialOrder, WeightedRing};

/// Environment variable overriding the default reduction-step budget.
pub const STEP_BUDGET_ENV: &str = "FSING_STEP_BUDGET";

const DEFAULT_STEP_BUDGET: u64 = 50_000_000;

/// Default number of reduction steps a single Gröbner computation may take.
pub fn default_step_budget() -> u64 {
    static BUDGET: OnceLock<u64> = OnceLock::new();
    *BUDGET.get_or_init(|| {
        std::env::var(STEP_BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_STEP_BUDGET)
    })
}

/// Countdown of reduction steps.
#[derive(Debug)]
pub struct StepBudget {
    left: u64,
    limit: u64,
}

impl StepBudget {
    pub fn new(limit: u64) -> Self {
        StepBudget { left: limit, limit }
    }

    fn tick(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::resource(format!(
                "Gröbner step budget of {} exhausted (set {STEP_BUDGET_ENV} to raise it)",
                self.limit
            )));
        }
        self.left -= 1;
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.limit - self.left
    }
}

impl Default for StepBudget {
    fn default() -> Self {
        Self::new(default_step_budget())
    }
}

fn split_lead(p: Polynomial) -> (Option<(Monomial, FieldElement)>, Polynomial) {
    if p.is_zero() {
        return (None, p);
    }
    let lead = p.lead_term().cloned();
    (lead, p.into_tail())
}

/// Full reduction of `f` by `basis` (monic elements). No term of the result is divisible
/// by a leading monomial of `basis`.
pub(crate) fn reduce(f: &Polynomial, basis: &[Polynomial], budget: &mut StepBudget) -> Result<Polynomial> {
    let ring = f.ring().clone();
    let field = *ring.field();
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, FieldElement)> = Vec::new();
    while let Some((m, c)) = p.lead_term().cloned() {
        let divisor = basis
            .iter()
            .find(|g| g.lead_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                budget.tick()?;
                let q = g.lead_monomial().unwrap().quotient_of(&m).unwrap();
                let coef = field.div(c, g.lead_coeff())?;
                p = p.add_scaled_shifted(field.neg(coef), &q, g)?;
            }
            None => {
                let (lead, rest) = split_lead(p);
                rem.push(lead.unwrap());
                p = rest;
            }
        }
    }
    // remainder terms were emitted in descending order
    Ok(Polynomial::from_sorted_terms(&ring, rem))
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (fm, gm) = (f.lead_monomial().unwrap(), g.lead_monomial().unwrap());
    let l = fm.lcm(gm);
    let field = f.ring().field();
    let a = f.mul_term(&fm.quotient_of(&l).unwrap(), field.inv(f.lead_coeff())?)?;
    let b = g.mul_term(&gm.quotient_of(&l).unwrap(), field.inv(g.lead_coeff())?)?;
    a.try_sub(&b)
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`, under the ring's order.
///
/// Pairs are processed smallest-lcm first; pairs with coprime leading monomials and pairs
/// ruled out by the chain criterion are skipped. The result is auto-reduced, monic and
/// sorted by ascending leading monomial.
pub fn buchberger(gens: &[Polynomial], ring: &WeightedRing) -> Result<Vec<Polynomial>> {
    buchberger_with_budget(gens, ring, &mut StepBudget::default())
}

pub fn buchberger_with_budget(
    gens: &[Polynomial],
    ring: &WeightedRing,
    budget: &mut StepBudget,
) -> Result<Vec<Polynomial>> {
    for g in gens {
        if g.ring() != ring {
            return Err(Error::usage(format!("generator {g} does not live in {ring:?}")));
        }
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let h = reduce(g, &basis, budget)?;
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        basis.push(h.monic());
    }

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    let lm = |b: &Vec<Polynomial>, i: usize| b[i].lead_monomial().unwrap().clone();

    while !pending.is_empty() {
        // normal strategy: smallest lcm, ties by index for determinism
        let &(i, j) = pending
            .iter()
            .min_by(|&&(a, b), &&(c, d)| {
                let l1 = lm(&basis, a).lcm(&lm(&basis, b));
                let l2 = lm(&basis, c).lcm(&lm(&basis, d));
                ring.cmp_monomials(&l1, &l2).then((a, b).cmp(&(c, d)))
            })
            .unwrap();
        pending.remove(&(i, j));
        let (mi, mj) = (lm(&basis, i), lm(&basis, j));
        if mi.is_coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis, k).divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        budget.tick()?;
        let s = s_polynomial(&basis[i], &basis[j])?;
        let h = reduce(&s, &basis, budget)?;
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        let n = basis.len();
        basis.push(h.monic());
        for k in 0..n {
            pending.insert((k, n));
        }
    }
    auto_reduce(basis, budget)
}

/// Minimalizes and inter-reduces a Gröbner basis.
fn auto_reduce(basis: Vec<Polynomial>, budget: &mut StepBudget) -> Result<Vec<Polynomial>> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let m = g.lead_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hm = h.lead_monomial().unwrap();
            k != i && hm.divides(m) && (hm != m || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let (lead, tail) = split_lead(minimal[i].clone());
        let (m, c) = lead.unwrap();
        let tail = reduce(&tail, &others, budget)?;
        let ring = tail.ring().clone();
        reduced.push(Polynomial::term(&ring, m, c).try_add(&tail)?.monic());
    }
    if let Some(first) = reduced.first() {
        let ring = first.ring().clone();
        reduced.sort_by(|a, b| ring.cmp_monomials(a.lead_monomial().unwrap(), b.lead_monomial().unwrap()));
    }
    Ok(reduced)
}

/// An ideal together with its reduced Gröbner basis, computed at construction.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: WeightedRing,
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
}

impl PartialEq for Ideal {
    /// Equality of ideals (reduced Gröbner bases are unique).
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.basis == other.basis
    }
}

impl Ideal {
    pub fn new(ring: &WeightedRing, generators: Vec<Polynomial>) -> Result<Self> {
        Self::with_budget(ring, generators, &mut StepBudget::default())
    }

    pub fn with_budget(ring: &WeightedRing, generators: Vec<Polynomial>, budget: &mut StepBudget) -> Result<Self> {
        let basis = buchberger_with_budget(&generators, ring, budget)?;
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            basis,
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &WeightedRing, gens: &[S]) -> Result<Self> {
        Self::new(ring, parse_polys(gens, ring)?)
    }

    pub fn zero(ring: &WeightedRing) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            basis: Vec::new(),
        }
    }

    /// `(x_1, ..., x_n)`.
    pub fn maximal(ring: &WeightedRing) -> Self {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Self::new(ring, gens).expect("variables form a Gröbner basis")
    }

    pub fn ring(&self) -> &WeightedRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_unit()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_zero() || g.is_monomial())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.lead_monomial().unwrap().clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        f.check_ring(&Polynomial::zero(&self.ring))?;
        reduce(f, &self.basis, &mut StepBudget::default())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `self + other`.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }
}

/// `normal_form` as a free function.
pub fn normal_form(f: &Polynomial, ideal: &Ideal) -> Result<Polynomial> {
    ideal.normal_form(f)
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

/// A quotient `S / relations` of a weighted polynomial ring by a homogeneous ideal.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    ambient: WeightedRing,
    relations: Ideal,
}

impl QuotientRing {
    pub fn new(relations: Ideal) -> Result<Self> {
        if !relations.is_homogeneous() {
            return Err(Error::usage("quotient relations must be homogeneous"));
        }
        Ok(QuotientRing {
            ambient: relations.ring().clone(),
            relations,
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &WeightedRing, relations: &[S]) -> Result<Self> {
        Self::new(Ideal::parse(ring, relations)?)
    }

    pub fn polynomial_ring(ring: &WeightedRing) -> Self {
        QuotientRing {
            ambient: ring.clone(),
            relations: Ideal::zero(ring),
        }
    }

    pub fn ambient(&self) -> &WeightedRing {
        &self.ambient
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn characteristic(&self) -> u32 {
        self.ambient.characteristic()
    }

    /// Canonical representative of the residue class of `f`.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.relations.normal_form(f)
    }

    /// Ambient ideal `J + relations`.
    pub fn lift(&self, gens: &[Polynomial]) -> Result<Ideal> {
        let mut all: Vec<Polynomial> = gens.to_vec();
        all.extend(self.relations.basis().iter().cloned());
        Ideal::new(&self.ambient, all)
    }

    pub fn parse_poly(&self, text: &str) -> Result<Polynomial> {
        crate::parse::parse_poly(text, &self.ambient)
    }

    pub fn parse_polys<S: AsRef<str>>(&self, texts: &[S]) -> Result<Vec<Polynomial>> {
        parse_polys(texts, &self.ambient)
    }
}

/// Membership of `f` in the ideal generated by `gens` inside `quotient`.
pub fn quotient_member(f: &Polynomial, gens: &[Polynomial], quotient: &QuotientRing) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    quotient.lift(gens)?.contains(f)
}

fn fresh_name(ring: &WeightedRing, base: &str) -> String {
    let mut name = base.to_string();
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    name
}

/// `I ∩ J` by eliminating an auxiliary variable from `u I + (1 - u) J`.
pub fn elim_intersection(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let ring = i.ring();
    if ring != j.ring() {
        return Err(Error::usage("intersection of ideals in different rings"));
    }
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let n = ring.nvars();
    let mut names = vec![fresh_name(ring, "u")];
    names.extend(ring.var_names().iter().cloned());
    let mut weights = vec![1];
    weights.extend_from_slice(ring.weights());
    let aux = WeightedRing::from_parts(*ring.field(), names, weights, MonomialOrder::Elimination { block: 1 })?;
    let shift: Vec<usize> = (1..=n).collect();
    let u = Polynomial::var(&aux, 0);
    let one_minus_u = &Polynomial::one(&aux) - &u;
    let mut gens = Vec::new();
    for g in i.basis() {
        gens.push(&u * &g.remap(&aux, &shift));
    }
    for g in j.basis() {
        gens.push(&one_minus_u * &g.remap(&aux, &shift));
    }
    let basis = buchberger(&gens, &aux)?;
    let back: Vec<usize> = std::iter::once(usize::MAX).chain(0..n).collect();
    let kept = basis
        .iter()
        .filter(|g| g.max_exponent(0) == 0)
        .map(|g| drop_front(g, ring, &back))
        .collect();
    Ideal::new(ring, kept)
}

fn drop_front(g: &Polynomial, target: &WeightedRing, back: &[usize]) -> Polynomial {
    Polynomial::from_terms(
        target,
        g.terms().iter().map(|(m, c)| {
            let e: Vec<u32> = m
                .exponents()
                .iter()
                .zip(back)
                .filter(|(_, &k)| k != usize::MAX)
                .map(|(&x, _)| x)
                .collect();
            (Monomial::from_exponents(e), *c)
        }),
    )
}

/// `I : (g)` computed as `(I ∩ (g)) / g`.
pub fn colon_element(i: &Ideal, g: &Polynomial) -> Result<Ideal> {
    let ring = i.ring();
    if g.is_zero() {
        return Err(Error::usage("colon by the zero element"));
    }
    if g.is_unit() {
        return Ok(i.clone());
    }
    let inter = elim_intersection(i, &Ideal::new(ring, vec![g.clone()])?)?;
    let gens = inter
        .basis()
        .iter()
        .map(|h| h.div_exact(g))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// `I : J = ∩_g (I : g)` over the generators `g` of `J`.
pub fn ideal_quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if i.ring() != j.ring() {
        return Err(Error::usage("ideal quotient of ideals in different rings"));
    }
    let gens: Vec<&Polynomial> = j.generators().iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Err(Error::usage("ideal quotient by the zero ideal"));
    }
    let mut acc: Option<Ideal> = None;
    for g in gens {
        let c = colon_element(i, g)?;
        acc = Some(match acc {
            None => c,
            Some(a) => elim_intersection(&a, &c)?,
        });
        if acc.as_ref().unwrap().is_unit() {
            break;
        }
    }
    Ok(acc.unwrap())
}

/// `I^[q] = (g^q : g a generator of I)`, `q` a power of the characteristic.
pub fn bracket_power(i: &Ideal, q: u64) -> Result<Ideal> {
    let field = i.ring().field();
    if field.log_p(q).is_none() {
        return Err(Error::usage(format!(
            "{q} is not a power of the characteristic {}",
            field.characteristic()
        )));
    }
    let gens = i
        .generators()
        .iter()
        .map(|g| g.frobenius_q(q))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(i.ring(), gens)
}

/// All `k`-fold products of generators, one per multiset: `C(s + k - 1, k)` of them.
pub fn power_products(gens: &[Polynomial], k: usize) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for combo in (0..gens.len()).combinations_with_replacement(k) {
        let mut acc = gens[combo[0]].clone();
        for &c in &combo[1..] {
            acc = acc.try_mul(&gens[c])?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Ordinary power `I^k`.
pub fn ideal_power(i: &Ideal, k: usize) -> Result<Ideal> {
    if k == 0 {
        return Err(Error::usage("ideal powers start at 1"));
    }
    if k == 1 {
        return Ok(i.clone());
    }
    let gens: Vec<Polynomial> = i.generators().iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Ok(Ideal::zero(i.ring()));
    }
    Ideal::new(i.ring(), power_products(&gens, k)?)
}

/// Every S-polynomial of `basis` reduces to zero (Buchberger's criterion).
pub fn is_groebner_basis(basis: &[Polynomial]) -> Result<bool> {
    let mut budget = StepBudget::default();
    for (a, b) in basis.iter().tuple_combinations() {
        let s = s_polynomial(a, b)?;
        if !reduce(&s, basis, &mut budget)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ring(p: u64, vars: &[&str]) -> WeightedRing {
        WeightedRing::standard(p, vars).unwrap()
    }

    fn e8(p: u64) -> WeightedRing {
        WeightedRing::new(p, &["x", "y", "z"], &[15, 10, 6]).unwrap()
    }

    fn polys(r: &WeightedRing, s: &[&str]) -> Vec<Polynomial> {
        parse_polys(s, r).unwrap()
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let r = e8(7);
        let f = parse_poly("x^2 + y^3 + z^5", &r).unwrap();
        assert_eq!(buchberger(std::slice::from_ref(&f), &r).unwrap(), vec![f]);
    }

    #[test]
    fn unit_ideal_detected() {
        let r = ring(7, &["x", "y"]);
        let b = buchberger(&polys(&r, &["x*y - 1", "x^2"]), &r).unwrap();
        assert_eq!(b, vec![Polynomial::one(&r)]);
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let r = ring(7, &["x"]);
        assert!(buchberger(&[], &r).unwrap().is_empty());
        assert!(buchberger(&[Polynomial::zero(&r)], &r).unwrap().is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let r = e8(7);
        let i = Ideal::parse(&r, &["x^2 + y^3 + z^5"]).unwrap();
        let x2 = parse_poly("x^2", &r).unwrap();
        assert_eq!(i.normal_form(&x2).unwrap(), parse_poly("-y^3 - z^5", &r).unwrap());
        let y = parse_poly("y", &r).unwrap();
        assert_eq!(i.normal_form(&y).unwrap(), y);
        assert!(i.normal_form(&Polynomial::zero(&r)).unwrap().is_zero());
    }

    #[test]
    fn membership_examples() {
        let r = ring(5, &["x", "y"]);
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(i.contains(&parse_poly("x^4", &r).unwrap()).unwrap());
        let ix = Ideal::parse(&r, &["x"]).unwrap();
        assert!(!ix.contains(&parse_poly("y", &r).unwrap()).unwrap());
    }

    #[test]
    fn quotient_membership_ex63() {
        let r = ring(2, &["x0", "x1", "x2", "x3"]);
        let q = QuotientRing::parse(&r, &["x0^3 + x1^3 + x2^3 + x3^3"]).unwrap();
        let sq = polys(&r, &["x1^2", "x2^2", "x3^2"]);
        assert!(quotient_member(&parse_poly("x0^4", &r).unwrap(), &sq, &q).unwrap());
        let lin = polys(&r, &["x1", "x2", "x3"]);
        assert!(!quotient_member(&parse_poly("x0^2", &r).unwrap(), &lin, &q).unwrap());
        assert!(quotient_member(&Polynomial::zero(&r), &lin, &q).unwrap());
    }

    #[test]
    fn intersections() {
        let r = ring(5, &["x", "y"]);
        let x = Ideal::parse(&r, &["x"]).unwrap();
        let y = Ideal::parse(&r, &["y"]).unwrap();
        assert_eq!(elim_intersection(&x, &y).unwrap(), Ideal::parse(&r, &["x*y"]).unwrap());
        let x2 = Ideal::parse(&r, &["x^2"]).unwrap();
        assert_eq!(elim_intersection(&x2, &x).unwrap(), x2);
        let xy = Ideal::parse(&r, &["x + y"]).unwrap();
        let inter = elim_intersection(&x, &xy).unwrap();
        assert_eq!(inter, Ideal::parse(&r, &["x^2 + x*y"]).unwrap());
    }

    #[test]
    fn quotients() {
        let r = ring(3, &["x", "y"]);
        let i = Ideal::parse(&r, &["x^2*y"]).unwrap();
        let j = Ideal::parse(&r, &["y"]).unwrap();
        assert_eq!(ideal_quotient(&i, &j).unwrap(), Ideal::parse(&r, &["x^2"]).unwrap());
        let one = Ideal::parse(&r, &["1"]).unwrap();
        assert_eq!(ideal_quotient(&i, &one).unwrap(), i);
        assert!(ideal_quotient(&i, &Ideal::zero(&r)).is_err());

        let r = ring(2, &["A", "B", "C"]);
        let i = Ideal::parse(&r, &["A*B", "B*C", "C*A"]).unwrap();
        let colon = ideal_quotient(&bracket_power(&i, 2).unwrap(), &i).unwrap();
        assert!(colon.contains(&parse_poly("A*B*C", &r).unwrap()).unwrap());
    }

    #[test]
    fn bracket_powers() {
        let r = ring(2, &["x", "y"]);
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert_eq!(
            bracket_power(&m, 2).unwrap(),
            Ideal::parse(&r, &["x^2", "y^2"]).unwrap()
        );
        assert!(matches!(bracket_power(&m, 3), Err(Error::Usage(_))));
        let r3 = ring(3, &["x", "y", "z"]);
        let i = Ideal::parse(&r3, &["x + y", "z"]).unwrap();
        assert_eq!(
            bracket_power(&i, 3).unwrap(),
            Ideal::parse(&r3, &["x^3 + y^3", "z^3"]).unwrap()
        );
        assert_eq!(bracket_power(&i, 1).unwrap(), i);
    }

    #[test]
    fn ordinary_powers() {
        let r = ring(5, &["x", "y"]);
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert_eq!(
            ideal_power(&m, 2).unwrap(),
            Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap()
        );
        assert_eq!(ideal_power(&m, 1).unwrap(), m);
        let gens = polys(&r, &["x", "y", "x + y"]);
        assert_eq!(power_products(&gens, 4).unwrap().len(), 15);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let r = ring(7, &["x", "y", "z"]);
        let gens = polys(&r, &["x*y - z^2", "x*z - y^2", "y*z - x^2"]);
        let err = buchberger_with_budget(&gens, &r, &mut StepBudget::new(0)).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn cyclic_like_system_passes_criterion() {
        let r = ring(31, &["x", "y", "z"]);
        let gens = polys(&r, &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]);
        let b = buchberger(&gens, &r).unwrap();
        assert!(is_groebner_basis(&b).unwrap());
        for g in &gens {
            assert!(reduce(g, &b, &mut StepBudget::default()).unwrap().is_zero());
        }
    }
}
