//! Manifest files: ring and divisor descriptions plus a list of checks.
//!
//! ```toml
//! p = 2
//! vars = ["x", "y", "z"]
//! weights = [15, 10, 6]
//! relations = ["x^2 + y^3 + z^5"]
//!
//! [rings.p7]
//! p = 7
//! vars = ["x", "y", "z"]
//! weights = [15, 10, 6]
//! relations = ["x^2 + y^3 + z^5"]
//!
//! [divisors]
//! D = [["VS", "-1/2"], ["VT", "1/3"], ["VST", "1/5"]]
//!
//! [[check]]
//! kind = "member"
//! element = "x^2"
//! ideal = ["y^2", "z^2"]
//! expect = true
//! ```
//!
//! Top-level `p`/`vars`/`weights`/`relations` define the ring named `default`; a top-level
//! `divisor` defines the divisor named `default`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::demazure::QDivisor;
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::ring::WeightedRing;

pub const DEFAULT_NAME: &str = "default";

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub p: u64,
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    #[serde(default)]
    pub relations: Vec<String>,
}

impl RingSpec {
    pub fn build(&self, p_override: Option<u64>) -> Result<QuotientRing> {
        let weights = self.weights.clone().unwrap_or_else(|| vec![1; self.vars.len()]);
        let ring = WeightedRing::new(p_override.unwrap_or(self.p), &self.vars, &weights)?;
        QuotientRing::parse(&ring, &self.relations)
    }
}

pub type DivisorSpec = Vec<(String, String)>;

/// Generators of a graded subalgebra, or the Veronese subring of index `veronese`.
#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SubringSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub veronese: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word_cap: Option<u64>,
}

/// Global bounds; each check may override its own.
#[derive(Clone, Copy, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    /// Largest Frobenius level searched.
    #[serde(rename = "E", default = "default_levels")]
    pub levels: u32,
    /// Largest direct-limit stage searched by the local cohomology zero test.
    #[serde(rename = "S_max", default = "default_s_max")]
    pub s_max: u64,
    #[serde(default = "default_truncation")]
    pub truncation: usize,
}

fn default_levels() -> u32 {
    crate::frobenius::DEFAULT_MAX_LEVEL
}

fn default_s_max() -> u64 {
    crate::localcoh::DEFAULT_SEARCH_BOUND
}

fn default_truncation() -> usize {
    30
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            levels: default_levels(),
            s_max: default_s_max(),
            truncation: default_truncation(),
        }
    }
}

/// Operation performed by a check, tagged by `kind`.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CheckSpec {
    Gb {
        ideal: Vec<String>,
    },
    Nf {
        element: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ideal: Option<Vec<String>>,
    },
    Member {
        element: String,
        ideal: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subring: Option<SubringSpec>,
    },
    Fclosure {
        element: String,
        ideal: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        levels: Option<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subring: Option<SubringSpec>,
    },
    Fedder {
        #[serde(default)]
        general: bool,
    },
    TcCert {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        multiplier: Option<String>,
        element: String,
        ideal: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        levels: Option<u32>,
        /// `bracket` (default) or `ordinary`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mode: Option<String>,
        /// `[a, b]` for the exponent `a q + b` on the element (ordinary mode).
        #[serde(default, skip_serializing_if = "Option::is_none")]
        element_exponent: Option<[i64; 2]>,
        /// `[a, b]` for the ideal power `a q + b` (ordinary mode).
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ideal_exponent: Option<[i64; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subring: Option<SubringSpec>,
    },
    Hilbert {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        truncation: Option<usize>,
    },
    Ainv {},
    Veronese {
        n: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        truncation: Option<usize>,
    },
    Multiplicity {
        dimension: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subring: Option<SubringSpec>,
        /// Number of Hilbert function values sampled for a subring.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bound: Option<u64>,
    },
    SubringHf {
        subring: SubringSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bound: Option<u64>,
    },
    SubringMember {
        subring: SubringSpec,
        element: String,
        ideal: Vec<String>,
        /// Tests membership in the `power`-th power of the ideal.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        power: Option<usize>,
    },
    Equalgen {
        n: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bound: Option<u64>,
    },
    Present {
        subring: SubringSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        symbols: Option<Vec<String>>,
        /// Relations that must lie in the computed ideal.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        contains: Option<Vec<String>>,
    },
    Divisor {
        /// `profile`, `floor`, `frac`, `section-dim`, `veronese` or `same-class`.
        op: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bound: Option<usize>,
        /// Divisor compared against by `same-class`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        other: Option<String>,
    },
    LcClass {
        sop: Vec<String>,
        numerator: String,
        exponents: Vec<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        frob: Option<u32>,
        /// `degree` or `iszero` (default).
        #[serde(default, skip_serializing_if = "Option::is_none")]
        op: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bound: Option<u64>,
    },
}

impl CheckSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            CheckSpec::Gb { .. } => "gb",
            CheckSpec::Nf { .. } => "nf",
            CheckSpec::Member { .. } => "member",
            CheckSpec::Fclosure { .. } => "fclosure",
            CheckSpec::Fedder { .. } => "fedder",
            CheckSpec::TcCert { .. } => "tc-cert",
            CheckSpec::Hilbert { .. } => "hilbert",
            CheckSpec::Ainv { .. } => "ainv",
            CheckSpec::Veronese { .. } => "veronese",
            CheckSpec::Multiplicity { .. } => "multiplicity",
            CheckSpec::SubringHf { .. } => "subring-hf",
            CheckSpec::SubringMember { .. } => "subring-member",
            CheckSpec::Equalgen { .. } => "equalgen",
            CheckSpec::Present { .. } => "present",
            CheckSpec::Divisor { .. } => "divisor",
            CheckSpec::LcClass { .. } => "lc-class",
        }
    }

    /// Whether the check reads a divisor instead of a ring.
    pub fn uses_divisor(&self) -> bool {
        matches!(self, CheckSpec::Divisor { .. })
    }
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
pub struct CheckEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<serde_json::Value>,
    /// Flagged checks can be skipped by the corpus runner.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub expensive: bool,
    #[serde(flatten)]
    pub spec: CheckSpec,
}

impl CheckEntry {
    pub fn new(spec: CheckSpec) -> Self {
        CheckEntry {
            name: None,
            ring: None,
            divisor: None,
            expect: None,
            expensive: false,
            spec,
        }
    }

    /// Name of the ring or divisor the check runs against.
    pub fn target(&self) -> &str {
        let t = if self.spec.uses_divisor() {
            &self.divisor
        } else {
            &self.ring
        };
        t.as_deref().unwrap_or(DEFAULT_NAME)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifest {
    p: Option<u64>,
    vars: Option<Vec<String>>,
    weights: Option<Vec<u32>>,
    relations: Option<Vec<String>>,
    divisor: Option<DivisorSpec>,
    #[serde(default)]
    rings: BTreeMap<String, RingSpec>,
    #[serde(default)]
    divisors: BTreeMap<String, DivisorSpec>,
    #[serde(default)]
    bounds: Option<Bounds>,
    #[serde(default)]
    check: Vec<toml::Spanned<CheckEntry>>,
}

/// A parsed manifest with its rings and divisors built.
#[derive(Clone, Debug)]
pub struct Manifest {
    pub rings: BTreeMap<String, QuotientRing>,
    pub ring_specs: BTreeMap<String, RingSpec>,
    pub divisors: BTreeMap<String, QDivisor>,
    pub bounds: Bounds,
    pub checks: Vec<CheckEntry>,
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

fn manifest_error(text: &str, offset: usize, message: impl Into<String>) -> Error {
    let (line, column) = line_col(text, offset);
    Error::Manifest {
        line,
        column,
        message: message.into(),
    }
}

pub fn build_divisor(spec: &DivisorSpec) -> Result<QDivisor> {
    let pairs: Vec<(&str, &str)> = spec.iter().map(|(l, c)| (l.as_str(), c.as_str())).collect();
    QDivisor::parse(&pairs)
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self> {
        Manifest::parse_with(text, None)
    }

    /// Parses a manifest; `p_override` replaces the characteristic of every ring.
    pub fn parse_with(text: &str, p_override: Option<u64>) -> Result<Self> {
        let raw: RawManifest = toml::from_str(text).map_err(|e| {
            let offset = e.span().map_or(0, |s| s.start);
            manifest_error(text, offset, e.message().trim().to_string())
        })?;
        let mut ring_specs = raw.rings;
        match (raw.p, raw.vars) {
            (Some(p), Some(vars)) => {
                if ring_specs.contains_key(DEFAULT_NAME) {
                    return Err(manifest_error(text, 0, "ring `default` defined twice"));
                }
                ring_specs.insert(
                    DEFAULT_NAME.into(),
                    RingSpec {
                        p,
                        vars,
                        weights: raw.weights,
                        relations: raw.relations.unwrap_or_default(),
                    },
                );
            }
            (None, None) if raw.weights.is_none() && raw.relations.is_none() => {}
            _ => return Err(manifest_error(text, 0, "top-level ring needs both `p` and `vars`")),
        }
        let mut rings = BTreeMap::new();
        for (name, spec) in &ring_specs {
            let q = spec
                .build(p_override)
                .map_err(|e| manifest_error(text, 0, format!("ring `{name}`: {e}")))?;
            rings.insert(name.clone(), q);
        }
        let mut divisor_specs = raw.divisors;
        if let Some(d) = raw.divisor {
            divisor_specs.insert(DEFAULT_NAME.into(), d);
        }
        let mut divisors = BTreeMap::new();
        for (name, spec) in &divisor_specs {
            let d = build_divisor(spec).map_err(|e| manifest_error(text, 0, format!("divisor `{name}`: {e}")))?;
            divisors.insert(name.clone(), d);
        }
        let mut checks = Vec::with_capacity(raw.check.len());
        for spanned in raw.check {
            let start = spanned.span().start;
            let entry = spanned.into_inner();
            let target = entry.target().to_string();
            let known = if entry.spec.uses_divisor() {
                divisors.contains_key(&target)
            } else {
                rings.contains_key(&target)
            };
            if !known {
                let what = if entry.spec.uses_divisor() { "divisor" } else { "ring" };
                return Err(manifest_error(
                    text,
                    start,
                    format!("check `{}` refers to undefined {what} `{target}`", entry.spec.kind()),
                ));
            }
            if let CheckSpec::Divisor { other: Some(o), .. } = &entry.spec {
                if !divisors.contains_key(o) {
                    return Err(manifest_error(text, start, format!("undefined divisor `{o}`")));
                }
            }
            checks.push(entry);
        }
        Ok(Manifest {
            rings,
            ring_specs,
            divisors,
            bounds: raw.bounds.unwrap_or_default(),
            checks,
        })
    }

    /// A manifest with one ring and one check, used by the single-operation subcommands.
    pub fn single(
        ring: Option<(&RingSpec, QuotientRing)>,
        divisor: Option<QDivisor>,
        check: CheckEntry,
        bounds: Bounds,
    ) -> Self {
        let mut m = Manifest {
            rings: BTreeMap::new(),
            ring_specs: BTreeMap::new(),
            divisors: BTreeMap::new(),
            bounds,
            checks: vec![check],
        };
        if let Some((spec, q)) = ring {
            m.ring_specs.insert(DEFAULT_NAME.into(), spec.clone());
            m.rings.insert(DEFAULT_NAME.into(), q);
        }
        if let Some(d) = divisor {
            m.divisors.insert(DEFAULT_NAME.into(), d);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
p = 2
vars = ["x", "y", "z"]
weights = [15, 10, 6]
relations = ["x^2 + y^3 + z^5"]

[divisors]
D = [["VS", "-1/2"], ["VT", "1/3"], ["VST", "1/5"]]

[[check]]
kind = "member"
element = "x^2"
ideal = ["y^2", "z^2"]
expect = true

[[check]]
kind = "divisor"
divisor = "D"
op = "section-dim"
n = 30
expect = 2
"#;

    #[test]
    fn parses_sample() {
        let m = Manifest::parse(SAMPLE).unwrap();
        assert_eq!(m.checks.len(), 2);
        assert_eq!(m.checks[0].spec.kind(), "member");
        assert_eq!(m.checks[1].target(), "D");
        assert_eq!(m.bounds, Bounds::default());
        assert_eq!(m.rings["default"].characteristic(), 2);
    }

    #[test]
    fn empty_manifest() {
        let m = Manifest::parse("").unwrap();
        assert!(m.checks.is_empty());
    }

    #[test]
    fn undefined_ring_is_reported_with_position() {
        let text = "[[check]]\nkind = \"ainv\"\nring = \"nope\"\n";
        match Manifest::parse(text) {
            Err(Error::Manifest { line, message, .. }) => {
                assert_eq!(line, 1);
                assert!(message.contains("nope"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_kind_rejected() {
        let text = "p = 2\nvars = [\"x\"]\n\n[[check]]\nkind = \"frobnicate\"\n";
        match Manifest::parse(text) {
            Err(e @ Error::Manifest { .. }) => assert_eq!(e.exit_code(), 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_error_has_line() {
        let text = "p = 2\nvars = [\"x\"\n";
        match Manifest::parse(text) {
            Err(Error::Manifest { line, .. }) => assert!(line >= 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn p_override() {
        let m = Manifest::parse_with(SAMPLE, Some(7)).unwrap();
        assert_eq!(m.rings["default"].characteristic(), 7);
    }
}
