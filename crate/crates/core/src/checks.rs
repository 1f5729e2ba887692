//! Executes manifest checks against the library and reduces each to a JSON value.

use serde_json::{json, Value};

use crate::demazure::{
    floor_divisor, fractional_part, same_fregularity_class, section_dim, section_ring_profile, veronese_divisor,
    QDivisor,
};
use crate::error::{Error, Result};
use crate::frobenius::{
    fedder_fpure, fedder_fpure_general, frobenius_closure_member, tc_certificate, ClosureStatus, ExponentRule,
    MembershipOracle, TcMode,
};
use crate::groebner::{power_products, Ideal, QuotientRing, StepBudget};
use crate::hilbert::{a_invariant, hilbert_series, multiplicity, veronese_series, HilbertSeries};
use crate::localcoh::{class_degree, frobenius_class, is_zero_class, CechClass, ZeroTest};
use crate::manifest::{Bounds, CheckEntry, CheckSpec, Manifest, SubringSpec};
use crate::poly::Polynomial;
use crate::subring::{
    equal_degree_generation_check, subring_hilbert_function, subring_ideal_member_graded, subring_presentation,
    veronese_generators, GradedSubalgebra,
};

/// What a check produced: the value compared against `expect`, plus supporting data.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub value: Value,
    pub witness: Option<Value>,
    pub detail: Option<String>,
}

impl Outcome {
    fn value(value: Value) -> Self {
        Outcome {
            value,
            witness: None,
            detail: None,
        }
    }

    fn with_witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

fn strings(polys: &[Polynomial]) -> Value {
    Value::from(polys.iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

fn big_list(v: &[num_bigint::BigInt]) -> Value {
    // coefficients that fit are emitted as numbers, the rest as strings
    Value::from(
        v.iter()
            .map(|c| match i64::try_from(c) {
                Ok(x) => Value::from(x),
                Err(_) => Value::from(c.to_string()),
            })
            .collect::<Vec<_>>(),
    )
}

pub fn build_subring(q: &QuotientRing, spec: &SubringSpec) -> Result<GradedSubalgebra> {
    let a = match (&spec.generators, spec.veronese) {
        (Some(gens), None) => GradedSubalgebra::parse(q, gens, spec.unit.unwrap_or(1))?,
        (None, Some(n)) => {
            if spec.unit.is_some_and(|u| u != n) {
                return Err(Error::usage("a Veronese subring has grading unit equal to its index"));
            }
            GradedSubalgebra::new(q, veronese_generators(q, n)?, n)?
        }
        _ => return Err(Error::usage("subring needs exactly one of `generators` or `veronese`")),
    };
    Ok(match spec.word_cap {
        Some(cap) => a.with_word_cap(cap),
        None => a,
    })
}

fn closure_outcome(status: &ClosureStatus, witness: Option<String>) -> Outcome {
    let (value, detail) = match status {
        ClosureStatus::MemberAtLevel(e) => (Value::Bool(true), format!("member at e = {e}")),
        ClosureStatus::NonMemberUpTo(e) => (Value::Bool(false), format!("non-member up to e = {e} (bounded search)")),
        ClosureStatus::Inconclusive(why) => (Value::Null, format!("inconclusive: {why}")),
    };
    let mut out = Outcome::value(value).with_detail(detail);
    if let Some(w) = witness {
        out = out.with_witness(Value::from(w));
    }
    out
}

fn divisor_pairs(d: &QDivisor) -> Value {
    let mut comps: Vec<_> = d.components().iter().filter(|(_, c)| *c.numer() != 0).collect();
    comps.sort_by(|a, b| a.0.cmp(&b.0));
    Value::from(comps.iter().map(|(l, c)| json!([l, c.to_string()])).collect::<Vec<_>>())
}

fn run_divisor(m: &Manifest, d: &QDivisor, spec: &CheckSpec, bounds: &Bounds) -> Result<Outcome> {
    let CheckSpec::Divisor { op, n, bound, other } = spec else {
        unreachable!()
    };
    let need_n = || n.ok_or_else(|| Error::usage(format!("divisor op `{op}` needs `n`")));
    Ok(match op.as_str() {
        "profile" => {
            let dims = section_ring_profile(d, bound.unwrap_or(bounds.truncation))?;
            Outcome::value(Value::from(dims))
        }
        "floor" => {
            let f = floor_divisor(d, need_n()?);
            Outcome::value(json!({
                "coefficients": f.components.iter().map(|c| c.1).collect::<Vec<_>>(),
                "degree": f.degree,
            }))
        }
        "frac" => Outcome::value(divisor_pairs(&fractional_part(d))),
        "section-dim" => Outcome::value(Value::from(section_dim(d, need_n()?))),
        "veronese" => Outcome::value(divisor_pairs(&veronese_divisor(d, need_n()?)?)),
        "same-class" => {
            let rhs = match (other, n) {
                (Some(name), None) => m.divisors[name].clone(),
                (None, Some(k)) => veronese_divisor(d, *k)?,
                _ => return Err(Error::usage("same-class needs exactly one of `other` or `n`")),
            };
            let same = same_fregularity_class(d, &rhs)?;
            let note = if same {
                "equal fractional parts: F-regularity and F-purity of the two section rings coincide"
            } else {
                "fractional parts differ: no conclusion"
            };
            Outcome::value(Value::Bool(same))
                .with_witness(json!([
                    divisor_pairs(&fractional_part(d)),
                    divisor_pairs(&fractional_part(&rhs))
                ]))
                .with_detail(note)
        }
        other => return Err(Error::usage(format!("unknown divisor op `{other}`"))),
    })
}

fn parse_ideal(q: &QuotientRing, gens: &[String]) -> Result<Vec<Polynomial>> {
    q.parse_polys(gens)
}

fn oracle_for<'a>(
    q: &'a QuotientRing,
    subring: &Option<SubringSpec>,
    holder: &'a mut Option<GradedSubalgebra>,
) -> Result<&'a dyn MembershipOracle> {
    Ok(match subring {
        Some(s) => {
            *holder = Some(build_subring(q, s)?);
            holder.as_ref().unwrap()
        }
        None => q,
    })
}

fn run_ring(q: &QuotientRing, spec: &CheckSpec, bounds: &Bounds) -> Result<Outcome> {
    Ok(match spec {
        CheckSpec::Gb { ideal } => {
            let i = Ideal::new(q.ambient(), parse_ideal(q, ideal)?)?;
            Outcome::value(strings(i.basis()))
        }
        CheckSpec::Nf { element, ideal } => {
            let f = q.parse_poly(element)?;
            let nf = match ideal {
                Some(gens) => q.lift(&parse_ideal(q, gens)?)?.normal_form(&f)?,
                None => q.reduce(&f)?,
            };
            Outcome::value(Value::from(nf.to_string()))
        }
        CheckSpec::Member {
            element,
            ideal,
            subring,
        } => {
            let mut holder = None;
            let oracle = oracle_for(q, subring, &mut holder)?;
            let f = q.parse_poly(element)?;
            Outcome::value(Value::Bool(oracle.is_member(&f, &parse_ideal(q, ideal)?)?))
        }
        CheckSpec::Fclosure {
            element,
            ideal,
            levels,
            subring,
        } => {
            let mut holder = None;
            let oracle = oracle_for(q, subring, &mut holder)?;
            let v = frobenius_closure_member(
                &q.parse_poly(element)?,
                &parse_ideal(q, ideal)?,
                oracle,
                levels.unwrap_or(bounds.levels),
            )?;
            closure_outcome(&v.status, v.witness.map(|w| w.to_string()))
        }
        CheckSpec::Fedder { general } => {
            let r = if *general {
                fedder_fpure_general(q)?
            } else {
                fedder_fpure(q)?
            };
            let mut out =
                Outcome::value(Value::Bool(r.f_pure)).with_detail(format!("{:?} criterion", r.method).to_lowercase());
            if let Some(w) = r.witness {
                out = out.with_witness(Value::from(w.to_string()));
            }
            out
        }
        CheckSpec::TcCert {
            multiplier,
            element,
            ideal,
            levels,
            mode,
            element_exponent,
            ideal_exponent,
            subring,
        } => {
            let mut holder = None;
            let oracle = oracle_for(q, subring, &mut holder)?;
            let c = match multiplier {
                Some(c) => q.parse_poly(c)?,
                None => Polynomial::one(q.ambient()),
            };
            let mode = match mode.as_deref().unwrap_or("bracket") {
                "bracket" => TcMode::Bracket,
                "ordinary" => {
                    let rule = |r: &Option<[i64; 2]>, what: &str| {
                        r.map(|[a, b]| ExponentRule::new(a, b))
                            .ok_or_else(|| Error::usage(format!("ordinary mode needs `{what}`")))
                    };
                    TcMode::Ordinary {
                        element: rule(element_exponent, "element_exponent")?,
                        ideal: rule(ideal_exponent, "ideal_exponent")?,
                    }
                }
                other => return Err(Error::usage(format!("unknown tight closure mode `{other}`"))),
            };
            let cert = tc_certificate(
                &c,
                &q.parse_poly(element)?,
                &parse_ideal(q, ideal)?,
                oracle,
                levels.unwrap_or(1),
                mode,
            )?;
            let levels: Vec<Value> = cert
                .levels
                .iter()
                .map(|l| json!({"e": l.e, "q": l.q, "passed": l.passed}))
                .collect();
            Outcome::value(Value::Bool(cert.all_passed()))
                .with_witness(Value::from(levels))
                .with_detail("bounded certificate: consistent with tight closure membership, not a proof")
        }
        CheckSpec::Hilbert { truncation } => {
            let h = hilbert_series(q)?;
            Outcome::value(big_list(&h.coefficients(truncation.unwrap_or(bounds.truncation) + 1)))
                .with_detail(h.to_string())
        }
        CheckSpec::Ainv {} => Outcome::value(Value::from(a_invariant(q)?)),
        CheckSpec::Veronese { n, truncation } => {
            let h = hilbert_series(q)?;
            let v = veronese_series(&h, *n, truncation.unwrap_or(bounds.truncation))?;
            Outcome::value(v.a_invariant.map_or(Value::Null, Value::from)).with_witness(big_list(&v.stream))
        }
        CheckSpec::Multiplicity {
            dimension,
            subring,
            bound,
        } => {
            let h = match subring {
                Some(s) => {
                    let a = build_subring(q, s)?;
                    let hf = subring_hilbert_function(&a, bound.unwrap_or(12))?;
                    HilbertSeries::from_hilbert_function(&hf, *dimension)?
                }
                None => hilbert_series(q)?,
            };
            let e = multiplicity(&h, *dimension)?;
            let mut out = Outcome::value(Value::from(e.value.to_string()));
            if e.weighted {
                out = out.with_detail("weighted grading: normalized limit of (1 - t)^d H(t)");
            }
            out
        }
        CheckSpec::SubringHf { subring, bound } => {
            let a = build_subring(q, subring)?;
            Outcome::value(Value::from(subring_hilbert_function(
                &a,
                bound.unwrap_or(bounds.truncation as u64),
            )?))
        }
        CheckSpec::SubringMember {
            subring,
            element,
            ideal,
            power,
        } => {
            let a = build_subring(q, subring)?;
            let x = q.parse_poly(element)?;
            let mut gens = parse_ideal(q, ideal)?;
            if let Some(k) = power {
                gens = power_products(&gens, *k)?;
            }
            let n = a.internal_degree(&x)?;
            Outcome::value(Value::Bool(subring_ideal_member_graded(&a, &x, &gens, n)?))
        }
        CheckSpec::Equalgen { n, bound } => {
            Outcome::value(Value::Bool(equal_degree_generation_check(q, *n, bound.unwrap_or(4))?))
        }
        CheckSpec::Present {
            subring,
            symbols,
            contains,
        } => {
            let a = build_subring(q, subring)?;
            let names = symbols
                .clone()
                .unwrap_or_else(|| (1..=a.generators().len()).map(|i| format!("y{i}")).collect());
            let rel = subring_presentation(&a, &names, &mut StepBudget::default())?;
            let relations = strings(rel.basis());
            match contains {
                Some(wanted) => {
                    let polys = crate::parse::parse_polys(wanted, rel.ring())?;
                    let all = polys.iter().map(|f| rel.contains(f)).collect::<Result<Vec<_>>>()?;
                    Outcome::value(Value::Bool(all.iter().all(|&b| b))).with_witness(relations)
                }
                None => Outcome::value(relations),
            }
        }
        CheckSpec::LcClass {
            sop,
            numerator,
            exponents,
            frob,
            op,
            bound,
        } => {
            let mut c = CechClass::parse(q, sop, numerator, exponents.clone())?;
            if let Some(e) = frob {
                c = frobenius_class(&c, *e)?;
            }
            match op.as_deref().unwrap_or("iszero") {
                "degree" => Outcome::value(Value::from(class_degree(&c)?)).with_detail(c.to_string()),
                "iszero" => match is_zero_class(&c, bound.unwrap_or(bounds.s_max))? {
                    ZeroTest::Zero { witness } => Outcome::value(Value::Bool(true))
                        .with_witness(json!({ "s": witness }))
                        .with_detail(c.to_string()),
                    ZeroTest::NonzeroUpTo { bound } => {
                        Outcome::value(Value::Bool(false)).with_detail(format!("{c}: nonzero up to s = {bound}"))
                    }
                },
                other => return Err(Error::usage(format!("unknown lc-class op `{other}`"))),
            }
        }
        CheckSpec::Divisor { .. } => unreachable!("divisor checks do not use a ring"),
    })
}

/// Runs one check of `manifest`.
pub fn execute(manifest: &Manifest, entry: &CheckEntry) -> Result<Outcome> {
    let target = entry.target();
    if entry.spec.uses_divisor() {
        let d = manifest
            .divisors
            .get(target)
            .ok_or_else(|| Error::usage(format!("undefined divisor `{target}`")))?;
        run_divisor(manifest, d, &entry.spec, &manifest.bounds)
    } else {
        let q = manifest
            .rings
            .get(target)
            .ok_or_else(|| Error::usage(format!("undefined ring `{target}`")))?;
        run_ring(q, &entry.spec, &manifest.bounds)
    }
}
