//! The built-in corpus: worked examples as embedded manifests, plus randomized property
//! suites with a fixed seed.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::demazure::{floor_divisor, fractional_part, veronese_divisor, QDivisor, Rational};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::{is_groebner_basis, Ideal, QuotientRing};
use crate::hilbert::{hilbert_series, veronese_series};
use crate::manifest::Manifest;
use crate::poly::Polynomial;
use crate::report::{run_manifest, CheckRecord, Report, RunOptions, Status};
use crate::ring::{Monomial, WeightedRing};
use crate::subring::{subring_hilbert_function, veronese_generators, GradedSubalgebra};

pub struct CorpusItem {
    pub id: &'static str,
    pub title: &'static str,
    pub manifest: &'static str,
}

pub const ITEMS: &[CorpusItem] = &[
    CorpusItem {
        id: "ex3.2",
        title: "weighted hypersurface x^2 + y^3 + z^5: Frobenius closure, a-invariants, local cohomology",
        manifest: include_str!("../corpus/ex3.2.toml"),
    },
    CorpusItem {
        id: "ex4.3",
        title: "section ring of a Q-divisor on the line versus the hypersurface",
        manifest: include_str!("../corpus/ex4.3.toml"),
    },
    CorpusItem {
        id: "ex5.3",
        title: "cubic Veronese subring of a subring of X^3 - YZ(Y + Z)",
        manifest: include_str!("../corpus/ex5.3.toml"),
    },
    CorpusItem {
        id: "ex5.4",
        title: "Veronese subring of index 4 of a weighted complete intersection",
        manifest: include_str!("../corpus/ex5.4.toml"),
    },
    CorpusItem {
        id: "ex6.3",
        title: "diagonal cubics in characteristic 2",
        manifest: include_str!("../corpus/ex6.3.toml"),
    },
    CorpusItem {
        id: "ex6.5",
        title: "Veronese subrings of the hypersurface for n prime to 30",
        manifest: include_str!("../corpus/ex6.5.toml"),
    },
    CorpusItem {
        id: "ex6.6",
        title: "presented section ring with square-free initial data",
        manifest: include_str!("../corpus/ex6.6.toml"),
    },
    CorpusItem {
        id: "ex7.3",
        title: "subring of s x_i, t x_i in a family hypersurface, k = d = 3",
        manifest: include_str!("../corpus/ex7.3.toml"),
    },
];

pub const PROPS_ID: &str = "props";

pub fn ids() -> Vec<&'static str> {
    ITEMS.iter().map(|i| i.id).chain(std::iter::once(PROPS_ID)).collect()
}

/// Runs one corpus item, or all of them when `filter` is `None`.
pub fn run_corpus(filter: Option<&str>, options: RunOptions) -> Result<Report> {
    if let Some(id) = filter {
        if !ids().contains(&id) {
            return Err(Error::Usage(format!(
                "unknown corpus id `{id}`; known: {}",
                ids().join(", ")
            )));
        }
    }
    let mut reports = Vec::new();
    for item in ITEMS {
        if filter.is_some_and(|f| f != item.id) {
            continue;
        }
        let manifest = Manifest::parse(item.manifest)?;
        let mut r = run_manifest(&manifest, options);
        for c in &mut r.checks {
            c.target = format!("{}/{}", item.id, c.target);
        }
        reports.push(r);
    }
    if filter.is_none_or(|f| f == PROPS_ID) {
        reports.push(property_report());
    }
    let title = match filter {
        Some(id) => format!("corpus {id}"),
        None => "corpus".to_string(),
    };
    Ok(Report::merge(Some(title), reports))
}

/// Random polynomial with up to `terms` terms of total degree at most `max_deg`.
pub fn random_poly(rng: &mut impl Rng, ring: &WeightedRing, terms: usize, max_deg: u32) -> Polynomial {
    let f = ring.field();
    let p = ring.characteristic() as u64;
    Polynomial::from_terms(
        ring,
        (0..terms).map(|_| {
            let mut left = rng.gen_range(0..=max_deg);
            let mut e = vec![0u32; ring.nvars()];
            for slot in e.iter_mut() {
                let k = rng.gen_range(0..=left);
                *slot = k;
                left -= k;
            }
            (Monomial::from_exponents(e), f.from_u64(rng.gen_range(1..p)))
        }),
    )
}

/// Random homogeneous polynomial of degree `d`.
pub fn random_homogeneous(rng: &mut impl Rng, ring: &WeightedRing, d: u64, terms: usize) -> Polynomial {
    let monos = ring.monomials_of_degree(d);
    if monos.is_empty() {
        return Polynomial::zero(ring);
    }
    let f = ring.field();
    let p = ring.characteristic() as u64;
    Polynomial::from_terms(
        ring,
        (0..terms).map(|_| {
            let m = monos[rng.gen_range(0..monos.len())].clone();
            (m, f.from_u64(rng.gen_range(1..p)))
        }),
    )
}

pub fn random_divisor(rng: &mut impl Rng, components: usize) -> QDivisor {
    let comps: Vec<(String, Rational)> = (0..components)
        .map(|i| {
            let q = rng.gen_range(1..=12i64);
            (format!("P{i}"), Rational::new(rng.gen_range(-30..=30), q))
        })
        .collect();
    QDivisor::new(comps).expect("labels are distinct")
}

fn property(name: &str, cases: usize, result: Result<Option<String>>) -> CheckRecord {
    let (status, detail, error) = match result {
        Ok(None) => (Status::Pass, None, None),
        Ok(Some(counterexample)) => (Status::Fail, Some(counterexample), None),
        Err(e) => (Status::Error, None, Some(e.to_string())),
    };
    CheckRecord {
        index: 0,
        name: Some(name.to_string()),
        kind: "property".into(),
        target: PROPS_ID.into(),
        inputs: json!({ "cases": cases }),
        status,
        value: Value::Bool(status == Status::Pass),
        expected: Some(Value::Bool(true)),
        witness: None,
        detail,
        error,
        millis: None,
    }
}

fn prop_groebner(rng: &mut ChaCha8Rng, cases: usize) -> Result<Option<String>> {
    let ring = WeightedRing::standard(7, &["x", "y", "z"])?;
    for _ in 0..cases {
        let gens: Vec<Polynomial> = (0..3).map(|_| random_poly(rng, &ring, 3, 3)).collect();
        let ideal = Ideal::new(&ring, gens.clone())?;
        if !is_groebner_basis(ideal.basis())? {
            return Ok(Some(format!("S-pair check failed for {gens:?}")));
        }
        for g in &gens {
            if !ideal.contains(g)? {
                return Ok(Some(format!("generator {g} not in its own ideal")));
            }
        }
        let f = random_poly(rng, &ring, 4, 5);
        let nf = ideal.normal_form(&f)?;
        if ideal.normal_form(&nf)? != nf {
            return Ok(Some(format!("normal form of {f} is not idempotent")));
        }
    }
    Ok(None)
}

/// Membership of a homogeneous `f` of degree `d` in `(gens)`, by Gaussian elimination on the
/// degree-`d` multiples of the generators. Shares nothing with the Gröbner code.
pub fn dense_member(f: &Polynomial, gens: &[Polynomial], d: u64) -> bool {
    let ring = f.ring();
    let p = ring.characteristic() as u64;
    let columns = ring.monomials_of_degree(d);
    let index: HashMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let to_row = |terms: &mut dyn Iterator<Item = (Monomial, u64)>| {
        let mut row = vec![0u64; columns.len()];
        for (m, c) in terms {
            let j = index[&m];
            row[j] = (row[j] + c) % p;
        }
        row
    };
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for g in gens {
        let Some(e) = g.terms().first().map(|(m, _)| ring.degree(m)) else {
            continue;
        };
        if e > d {
            continue;
        }
        for m in ring.monomials_of_degree(d - e) {
            rows.push(to_row(
                &mut g
                    .terms()
                    .iter()
                    .map(|(n, c)| (n.checked_mul(&m).unwrap(), c.value() as u64)),
            ));
        }
    }
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    let reduce = |mut v: Vec<u64>, pivots: &[(usize, Vec<u64>)]| {
        for (col, row) in pivots {
            let c = v[*col];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a = (*a + (p - c) * b) % p;
                }
            }
        }
        v
    };
    for row in rows {
        let v = reduce(row, &pivots);
        if let Some(col) = v.iter().position(|&c| c != 0) {
            let inv = mod_pow(v[col], p - 2, p);
            pivots.push((col, v.iter().map(|c| c * inv % p).collect()));
        }
    }
    let v = reduce(
        to_row(&mut f.terms().iter().map(|(m, c)| (m.clone(), c.value() as u64))),
        &pivots,
    );
    v.iter().all(|&c| c == 0)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn prop_membership_linear_algebra(rng: &mut ChaCha8Rng, cases: usize) -> Result<Option<String>> {
    let ring = WeightedRing::standard(5, &["x", "y", "z"])?;
    for k in 0..cases {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let e = rng.gen_range(1..=3);
                random_homogeneous(rng, &ring, e, 3)
            })
            .filter(|g| !g.is_zero())
            .collect();
        let ideal = Ideal::new(&ring, gens.clone())?;
        let d = 1 + (k % 12) as u64;
        // half the cases are built inside the ideal so both verdicts get exercised
        let mut f = random_homogeneous(rng, &ring, d, 4);
        if k % 2 == 0 {
            f = Polynomial::zero(&ring);
            for g in &gens {
                let e = ring.degree(&g.terms()[0].0);
                if e <= d {
                    f = f.try_add(&random_homogeneous(rng, &ring, d - e, 2).try_mul(g)?)?;
                }
            }
        }
        if ideal.contains(&f)? != dense_member(&f, &gens, d) {
            return Ok(Some(format!("{f} in ({gens:?}), degree {d}")));
        }
    }
    Ok(None)
}

fn prop_frobenius_additive(rng: &mut ChaCha8Rng, cases: usize) -> Result<Option<String>> {
    for (k, p) in [2u64, 3, 5, 7].into_iter().cycle().take(cases).enumerate() {
        let ring = WeightedRing::standard(p, &["x", "y", "z"])?;
        let f = random_poly(rng, &ring, 3, 3);
        let g = random_poly(rng, &ring, 3, 3);
        let e = 1 + (k % 2) as u32;
        let lhs = f.try_add(&g)?.frobenius(e)?;
        let rhs = f.frobenius(e)?.try_add(&g.frobenius(e)?)?;
        // Frobenius is raising to p^e: compare with an honest power where that is cheap
        let honest_ok = p.pow(e) > 9 || f.try_add(&g)?.pow(p.pow(e))? == lhs;
        if lhs != rhs || !honest_ok {
            return Ok(Some(format!("({f}) + ({g}) at p = {p}, e = {e}")));
        }
    }
    Ok(None)
}

fn prop_floor_identity(rng: &mut ChaCha8Rng, cases: usize) -> Result<Option<String>> {
    for _ in 0..cases {
        let k = rng.gen_range(1..=4);
        let d = random_divisor(rng, k);
        let frac = fractional_part(&d);
        for n in 0..=24i64 {
            let lhs = floor_divisor(&d, -n);
            for (i, (label, c)) in d.components().iter().enumerate() {
                let right = (*c * n + frac.coefficient(label)).floor().to_integer();
                if -lhs.components[i].1 != right {
                    return Ok(Some(format!("D = {d}, n = {n}")));
                }
            }
        }
        if !fractional_part(&frac).same_as(&frac) {
            return Ok(Some(format!("fractional part of {d} is not stable")));
        }
        let n = rng.gen_range(1..=24);
        let coprime = d.components().iter().all(|(_, c)| num_integer::gcd(n, *c.denom()) == 1);
        if coprime && !fractional_part(&veronese_divisor(&d, n)?).same_as(&frac) {
            return Ok(Some(format!("fractional part of {n}D differs for D = {d}")));
        }
    }
    Ok(None)
}

fn prop_veronese_two_paths(bound: u64) -> Result<Option<String>> {
    let ring = WeightedRing::new(2, &["x", "y", "z"], &[15, 10, 6])?;
    let q = QuotientRing::parse(&ring, &["x^2 + y^3 + z^5"])?;
    let h = hilbert_series(&q)?;
    for n in [2u64, 3, 4, 5, 7, 30] {
        let a = GradedSubalgebra::new(&q, veronese_generators(&q, n)?, n)?;
        let by_rank = subring_hilbert_function(&a, bound)?;
        let by_series = veronese_series(&h, n, bound as usize)?.stream;
        let by_series: Vec<u64> = by_series.iter().map(|c| u64::try_from(c).unwrap_or(u64::MAX)).collect();
        if by_rank != by_series {
            return Ok(Some(format!("n = {n}: ranks {by_rank:?}, series {by_series:?}")));
        }
    }
    Ok(None)
}

fn prop_monomial_ideal_numerator(rng: &mut ChaCha8Rng, cases: usize) -> Result<Option<String>> {
    // series of S/I from the recursion versus counting standard monomials degree by degree
    let ring = WeightedRing::new(3, &["a", "b", "c"], &[1, 2, 3])?;
    for _ in 0..cases {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=4))
            .map(|_| {
                let e: Vec<u32> = (0..3).map(|_| rng.gen_range(0..=3)).collect();
                Polynomial::term(&ring, Monomial::from_exponents(e), FieldElement::ONE)
            })
            .collect();
        let q = QuotientRing::new(Ideal::new(&ring, gens.clone())?)?;
        let series = hilbert_series(&q)?.coefficients(16);
        let leads = q.relations().leading_monomials();
        for (d, c) in series.iter().enumerate() {
            let count = ring
                .monomials_of_degree(d as u64)
                .iter()
                .filter(|m| !leads.iter().any(|l| l.divides(m)))
                .count();
            if *c != count.into() {
                return Ok(Some(format!("{gens:?} in degree {d}")));
            }
        }
    }
    Ok(None)
}

/// Randomized invariant checks; seeded, so the report is reproducible.
pub fn property_report() -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let checks = vec![
        property(
            "groebner post-check and idempotent normal forms",
            30,
            prop_groebner(&mut rng, 30),
        ),
        property(
            "membership versus dense linear algebra",
            120,
            prop_membership_linear_algebra(&mut rng, 120),
        ),
        property("Frobenius additivity", 1000, prop_frobenius_additive(&mut rng, 1000)),
        property(
            "floor identity and fractional parts",
            500,
            prop_floor_identity(&mut rng, 500),
        ),
        property("Veronese series versus subring ranks", 6, prop_veronese_two_paths(6)),
        property(
            "monomial Hilbert numerators",
            40,
            prop_monomial_ideal_numerator(&mut rng, 40),
        ),
    ];
    Report::new(None, checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id_is_usage_error() {
        assert!(matches!(
            run_corpus(Some("ex9.9"), RunOptions::default()),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn every_manifest_parses() {
        for item in ITEMS {
            Manifest::parse(item.manifest).unwrap_or_else(|e| panic!("{}: {e}", item.id));
        }
    }
}
