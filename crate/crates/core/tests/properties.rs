use proptest::prelude::*;

use fsing::corpus::dense_member;
use fsing::demazure::{floor_divisor, fractional_part, section_ring_profile, veronese_divisor, QDivisor, Rational};
use fsing::groebner::is_groebner_basis;
use fsing::hilbert::{hilbert_series, veronese_series};
use fsing::localcoh::{class_degree, frobenius_class, CechClass};
use fsing::subring::{subring_hilbert_function, veronese_generators, GradedSubalgebra, LinearSpan};
use fsing::{Ideal, Monomial, Polynomial, QuotientRing, WeightedRing};

fn ring(p: u64) -> WeightedRing {
    WeightedRing::standard(p, &["x", "y", "z"]).unwrap()
}

fn poly_from(ring: &WeightedRing, terms: &[(Vec<u32>, u64)]) -> Polynomial {
    let f = ring.field();
    Polynomial::from_terms(
        ring,
        terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e.clone()), f.from_u64(*c))),
    )
}

fn terms(max_exp: u32, max_len: usize) -> impl Strategy<Value = Vec<(Vec<u32>, u64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, 3), 1u64..1000), 1..=max_len)
}

/// Homogeneous terms of degree `d` in three standard-graded variables.
fn homogeneous_terms(d: u32, max_len: usize) -> impl Strategy<Value = Vec<(Vec<u32>, u64)>> {
    prop::collection::vec(((0..=d), (0..=d), 1u64..1000), 1..=max_len).prop_map(move |v| {
        v.into_iter()
            .map(|(a, b, c)| {
                let a = a.min(d);
                let b = b.min(d - a);
                (vec![a, b, d - a - b], c)
            })
            .collect()
    })
}

fn divisor() -> impl Strategy<Value = QDivisor> {
    prop::collection::vec((-30i64..=30, 1i64..=12), 1..=4).prop_map(|cs| {
        QDivisor::new(
            cs.into_iter()
                .enumerate()
                .map(|(i, (n, d))| (format!("P{i}"), Rational::new(n, d))),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn groebner_basis_post_check(gens in prop::collection::vec(terms(3, 3), 1..=3), f in terms(5, 4)) {
        let r = ring(7);
        let gens: Vec<Polynomial> = gens.iter().map(|t| poly_from(&r, t)).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        prop_assert!(is_groebner_basis(ideal.basis()).unwrap());
        for g in &gens {
            prop_assert!(ideal.contains(g).unwrap());
        }
        let f = poly_from(&r, &f);
        let nf = ideal.normal_form(&f).unwrap();
        prop_assert_eq!(ideal.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(ideal.contains(&f.try_sub(&nf).unwrap()).unwrap());
    }

    #[test]
    fn membership_agrees_with_linear_algebra(
        g1 in homogeneous_terms(2, 3),
        g2 in homogeneous_terms(3, 3),
        h1 in homogeneous_terms(10, 3),
        h2 in homogeneous_terms(9, 3),
        noise in homogeneous_terms(12, 2),
        add_noise in any::<bool>(),
    ) {
        let r = ring(5);
        let gens = vec![poly_from(&r, &g1), poly_from(&r, &g2)];
        let mut f = poly_from(&r, &h1).try_mul(&gens[0]).unwrap()
            .try_add(&poly_from(&r, &h2).try_mul(&gens[1]).unwrap()).unwrap();
        if add_noise {
            f = f.try_add(&poly_from(&r, &noise)).unwrap();
        }
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        prop_assert_eq!(ideal.contains(&f).unwrap(), dense_member(&f, &gens, 12));
    }

    #[test]
    fn frobenius_matches_honest_power(p in prop::sample::select(vec![2u64, 3]), f in terms(2, 3)) {
        let r = ring(p);
        let f = poly_from(&r, &f);
        prop_assert_eq!(f.frobenius(1).unwrap(), f.pow(p).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, ..ProptestConfig::default() })]

    #[test]
    fn floor_identity(d in divisor()) {
        let frac = fractional_part(&d);
        for n in 0..=24i64 {
            let lhs = floor_divisor(&d, -n);
            for (i, (label, c)) in d.components().iter().enumerate() {
                let rhs = (*c * n + frac.coefficient(label)).floor().to_integer();
                prop_assert_eq!(-lhs.components[i].1, rhs);
            }
        }
    }

    #[test]
    fn fractional_part_is_stable_under_coprime_multiples(d in divisor(), n in 1i64..=60) {
        let frac = fractional_part(&d);
        prop_assert!(fractional_part(&frac).same_as(&frac));
        let coprime = d.components().iter().all(|(_, c)| num_integer::gcd(n, *c.denom()) == 1);
        if coprime {
            prop_assert!(fractional_part(&veronese_divisor(&d, n).unwrap()).same_as(&frac));
        }
    }

    #[test]
    fn linear_span_contains_what_it_inserted(rows in prop::collection::vec(homogeneous_terms(3, 3), 1..=6)) {
        let r = ring(3);
        let mut span = LinearSpan::new(&r);
        let polys: Vec<Polynomial> = rows.iter().map(|t| poly_from(&r, t)).collect();
        for f in &polys {
            let (before, known) = (span.rank(), span.contains(f).unwrap());
            let grew = span.insert(f).unwrap();
            prop_assert!(span.contains(f).unwrap());
            prop_assert_eq!(grew, !known);
            prop_assert_eq!(span.rank(), before + grew as usize);
        }
        prop_assert!(span.rank() <= polys.len().min(10));
        let sum = polys.iter().fold(Polynomial::zero(&r), |a, b| a.try_add(b).unwrap());
        prop_assert!(span.contains(&sum).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn frobenius_is_additive_and_multiplicative(
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
        e in 1u32..=2,
        f in terms(3, 3),
        g in terms(3, 3),
    ) {
        let r = ring(p);
        let (f, g) = (poly_from(&r, &f), poly_from(&r, &g));
        let sum = f.try_add(&g).unwrap().frobenius(e).unwrap();
        prop_assert_eq!(sum, f.frobenius(e).unwrap().try_add(&g.frobenius(e).unwrap()).unwrap());
        let prod = f.try_mul(&g).unwrap().frobenius(e).unwrap();
        prop_assert_eq!(prod, f.frobenius(e).unwrap().try_mul(&g.frobenius(e).unwrap()).unwrap());
    }
}

fn e8(p: u64) -> QuotientRing {
    let r = WeightedRing::new(p, &["x", "y", "z"], &[15, 10, 6]).unwrap();
    QuotientRing::parse(&r, &["x^2 + y^3 + z^5"]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn cech_degree_is_shift_invariant_and_scales_under_frobenius(
        p in prop::sample::select(vec![2u64, 3, 5]),
        x_power in 0u32..=1,
        a in 1u64..=4,
        b in 1u64..=4,
    ) {
        let q = e8(p);
        let num = if x_power == 0 { "1" } else { "x" };
        let c = CechClass::parse(&q, &["y", "z"], num, vec![a, b]).unwrap();
        let d = class_degree(&c).unwrap();
        prop_assert_eq!(class_degree(&c.shifted().unwrap()).unwrap(), d);
        prop_assert_eq!(class_degree(&frobenius_class(&c, 1).unwrap()).unwrap(), d * p as i64);
    }
}

#[test]
fn veronese_two_paths_agree() {
    let q = e8(2);
    let h = hilbert_series(&q).unwrap();
    for n in [2u64, 3, 4, 5, 7, 30] {
        let a = GradedSubalgebra::new(&q, veronese_generators(&q, n).unwrap(), n).unwrap();
        let by_rank = subring_hilbert_function(&a, 6).unwrap();
        let by_series: Vec<u64> = veronese_series(&h, n, 6)
            .unwrap()
            .stream
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect();
        assert_eq!(by_rank, by_series, "n = {n}");
    }
}

/// a(R^(n)) against the curve: R^(n) is the section ring of nD on the projective line, so its
/// a-invariant is the largest k with h^1(O(floor(k n D))) = max(0, -deg - 1) nonzero.
#[test]
fn veronese_a_invariant_matches_divisor() {
    let q = e8(2);
    let h = hilbert_series(&q).unwrap();
    let d = QDivisor::parse(&[("VS", "-1/2"), ("VT", "1/3"), ("VST", "1/5")]).unwrap();
    assert_eq!(section_ring_profile(&d, 40).unwrap(), {
        let c = h.coefficients(41);
        c.iter().map(|v| u64::try_from(v).unwrap()).collect::<Vec<_>>()
    });
    for n in 1..=30i64 {
        let by_curve = (-200..=0).rev().find(|&k| floor_divisor(&d, k * n).degree <= -2);
        let by_series = veronese_series(&h, n as u64, 4).unwrap().a_invariant;
        assert_eq!(by_series, by_curve, "n = {n}");
    }
}

#[test]
fn polynomial_ring_veronese_is_cubic_count() {
    let r = WeightedRing::standard(7, &["Y", "Z"]).unwrap();
    let q = QuotientRing::polynomial_ring(&r);
    for n in 1..=4u64 {
        let a = GradedSubalgebra::new(&q, veronese_generators(&q, n).unwrap(), n).unwrap();
        let want: Vec<u64> = (0..=6).map(|k| n * k + 1).collect();
        assert_eq!(subring_hilbert_function(&a, 6).unwrap(), want);
    }
}
