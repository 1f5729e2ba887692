//! Frobenius closure membership, Fedder's F-purity criterion and bounded tight closure
//! certificates.
//!
//! Every positive answer carries a containment that can be replayed; searches over
//! Frobenius powers are bounded and say so.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{bracket_power, ideal_quotient, power_products, quotient_member, Ideal, QuotientRing};
use crate::poly::Polynomial;
use crate::subring::{subring_ideal_member_graded, GradedSubalgebra};

pub const DEFAULT_MAX_LEVEL: u32 = 4;

/// Something that can decide `f in (gens)` for homogeneous data.
pub trait MembershipOracle {
    fn is_member(&self, f: &Polynomial, gens: &[Polynomial]) -> Result<bool>;

    fn is_zero(&self, f: &Polynomial) -> Result<bool> {
        self.is_member(f, &[])
    }

    fn characteristic(&self) -> u32;
}

impl MembershipOracle for QuotientRing {
    fn is_member(&self, f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
        quotient_member(f, gens, self)
    }

    fn characteristic(&self) -> u32 {
        QuotientRing::characteristic(self)
    }
}

impl MembershipOracle for GradedSubalgebra {
    fn is_member(&self, f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
        let f = self.ambient().reduce(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        let n = self.internal_degree(&f)?;
        subring_ideal_member_graded(self, &f, gens, n)
    }

    fn characteristic(&self) -> u32 {
        self.ambient().characteristic()
    }
}

/// `element in (ideal)` inside the oracle's ring, with `q` recording the Frobenius power used.
#[derive(Clone, Debug)]
pub struct Containment {
    pub element: Polynomial,
    pub ideal: Vec<Polynomial>,
    pub q: u64,
}

impl Containment {
    pub fn replay(&self, oracle: &dyn MembershipOracle) -> Result<bool> {
        oracle.is_member(&self.element, &self.ideal)
    }
}

impl fmt::Display for Containment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in (", self.element)?;
        for (i, g) in self.ideal.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ") at q = {}", self.q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureStatus {
    MemberAtLevel(u32),
    NonMemberUpTo(u32),
    Inconclusive(String),
}

#[derive(Clone, Debug)]
pub struct ClosureVerdict {
    pub status: ClosureStatus,
    pub witness: Option<Containment>,
}

impl ClosureVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self.status, ClosureStatus::MemberAtLevel(_))
    }
}

fn frobenius_all(gens: &[Polynomial], e: u32) -> Result<Vec<Polynomial>> {
    gens.iter().map(|g| g.frobenius(e)).collect()
}

/// Searches `e = 1..=max_level` for `x^{p^e} in J^{[p^e]}`.
pub fn frobenius_closure_member(
    x: &Polynomial,
    j: &[Polynomial],
    oracle: &dyn MembershipOracle,
    max_level: u32,
) -> Result<ClosureVerdict> {
    if max_level == 0 {
        return Err(Error::usage("Frobenius closure search needs at least one level"));
    }
    for e in 1..=max_level {
        let step = (|| -> Result<Containment> {
            let q = (oracle.characteristic() as u64)
                .checked_pow(e)
                .ok_or_else(|| Error::resource("Frobenius power overflows"))?;
            Ok(Containment {
                element: x.frobenius(e)?,
                ideal: frobenius_all(j, e)?,
                q,
            })
        })();
        let containment = match step {
            Ok(c) => c,
            Err(Error::Resource(msg)) => {
                return Ok(ClosureVerdict {
                    status: ClosureStatus::Inconclusive(format!("level {e}: {msg}")),
                    witness: None,
                })
            }
            Err(err) => return Err(err),
        };
        match containment.replay(oracle) {
            Ok(true) => {
                return Ok(ClosureVerdict {
                    status: ClosureStatus::MemberAtLevel(e),
                    witness: Some(containment),
                })
            }
            Ok(false) => {}
            Err(Error::Resource(msg)) => {
                return Ok(ClosureVerdict {
                    status: ClosureStatus::Inconclusive(format!("level {e}: {msg}")),
                    witness: None,
                })
            }
            Err(err) => return Err(err),
        }
    }
    Ok(ClosureVerdict {
        status: ClosureStatus::NonMemberUpTo(max_level),
        witness: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FedderMethod {
    Trivial,
    Hypersurface,
    Colon,
}

#[derive(Clone, Debug)]
pub struct FedderResult {
    pub f_pure: bool,
    /// A term of `f^{p-1}` or an element of `I^{[p]} : I` outside `m^{[p]}`.
    pub witness: Option<Polynomial>,
    pub method: FedderMethod,
}

fn outside_bracket_maximal(f: &Polynomial, p: u32) -> bool {
    f.terms().iter().any(|(m, _)| m.exponents().iter().all(|&e| e < p))
}

/// Drops terms lying in `m^{[p]}`.
fn prune(f: &Polynomial, p: u32) -> Polynomial {
    Polynomial::from_terms(
        f.ring(),
        f.terms()
            .iter()
            .filter(|(m, _)| m.exponents().iter().all(|&e| e < p))
            .cloned(),
    )
}

/// `f^{p-1}` modulo `m^{[p]}` by repeated squaring, pruning after every product.
pub fn pruned_power(f: &Polynomial, p: u32) -> Result<Polynomial> {
    let mut k = p as u64 - 1;
    let mut base = prune(f, p);
    let mut acc = Polynomial::one(f.ring());
    while k > 0 {
        if k & 1 == 1 {
            acc = prune(&acc.try_mul(&base)?, p);
        }
        k >>= 1;
        if k > 0 {
            base = prune(&base.try_mul(&base)?, p);
        }
    }
    Ok(acc)
}

fn check_relations(q: &QuotientRing) -> Result<Option<FedderResult>> {
    let rel = q.relations();
    if rel.is_unit() {
        return Err(Error::usage("Fedder's criterion needs a proper ideal"));
    }
    if rel.is_zero() {
        return Ok(Some(FedderResult {
            f_pure: true,
            witness: Some(Polynomial::one(q.ambient())),
            method: FedderMethod::Trivial,
        }));
    }
    Ok(None)
}

/// Fedder's criterion for `S / I`: F-pure iff `(I^{[p]} : I)` is not inside `m^{[p]}`.
/// Principal `I = (f)` uses `f^{p-1}` directly.
pub fn fedder_fpure(q: &QuotientRing) -> Result<FedderResult> {
    if let Some(r) = check_relations(q)? {
        return Ok(r);
    }
    let basis = q.relations().basis();
    if basis.len() == 1 {
        let p = q.characteristic();
        let pw = pruned_power(&basis[0], p)?;
        let witness = pw
            .lead_term()
            .map(|(m, c)| Polynomial::term(q.ambient(), m.clone(), *c));
        return Ok(FedderResult {
            f_pure: witness.is_some(),
            witness,
            method: FedderMethod::Hypersurface,
        });
    }
    fedder_fpure_general(q)
}

/// The colon form of the criterion, for any proper homogeneous ideal.
pub fn fedder_fpure_general(q: &QuotientRing) -> Result<FedderResult> {
    if let Some(r) = check_relations(q)? {
        return Ok(r);
    }
    let p = q.characteristic();
    let rel = q.relations();
    let colon: Ideal = ideal_quotient(&bracket_power(rel, p as u64)?, rel)?;
    let witness = colon.basis().iter().find(|g| outside_bracket_maximal(g, p)).cloned();
    Ok(FedderResult {
        f_pure: witness.is_some(),
        witness,
        method: FedderMethod::Colon,
    })
}

/// `a q + b`, used for exponents that depend on the Frobenius power.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentRule {
    pub q_coeff: i64,
    pub constant: i64,
}

impl ExponentRule {
    pub fn new(q_coeff: i64, constant: i64) -> Self {
        ExponentRule { q_coeff, constant }
    }

    pub fn eval(&self, q: u64) -> Result<u64> {
        let v = self
            .q_coeff
            .checked_mul(q as i64)
            .and_then(|v| v.checked_add(self.constant))
            .ok_or_else(|| Error::resource("exponent overflows"))?;
        if v <= 0 {
            return Err(Error::usage(format!("exponent rule gives {v} at q = {q}")));
        }
        Ok(v as u64)
    }
}

impl fmt::Display for ExponentRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.q_coeff, self.constant) {
            (0, b) => write!(f, "{b}"),
            (a, 0) => write!(f, "{a}q"),
            (a, b) if b < 0 => write!(f, "{a}q - {}", -b),
            (a, b) => write!(f, "{a}q + {b}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcMode {
    /// `c x^q in I^{[q]}`.
    Bracket,
    /// `c x^{element(q)} in I^{ideal(q)}`.
    Ordinary { element: ExponentRule, ideal: ExponentRule },
}

#[derive(Clone, Debug)]
pub struct LevelCheck {
    pub e: u32,
    pub q: u64,
    pub passed: bool,
    pub containment: Containment,
}

#[derive(Clone, Debug)]
pub struct TightClosureCertificate {
    pub multiplier: Polynomial,
    pub element: Polynomial,
    pub ideal: Vec<Polynomial>,
    pub mode: TcMode,
    pub levels: Vec<LevelCheck>,
}

impl TightClosureCertificate {
    /// Every checked level passed. Bounded evidence for `x in I*`, not a proof.
    pub fn all_passed(&self) -> bool {
        self.levels.iter().all(|l| l.passed)
    }
}

/// Checks `e = 1..=max_level`. `c` must be nonzero; that it avoids the minimal primes is
/// the caller's assertion.
pub fn tc_certificate(
    c: &Polynomial,
    x: &Polynomial,
    ideal: &[Polynomial],
    oracle: &dyn MembershipOracle,
    max_level: u32,
    mode: TcMode,
) -> Result<TightClosureCertificate> {
    if max_level == 0 {
        return Err(Error::usage("tight closure certificate needs at least one level"));
    }
    if oracle.is_zero(c)? {
        return Err(Error::usage("the multiplier c is zero in the ring"));
    }
    let p = oracle.characteristic() as u64;
    let mut levels = Vec::new();
    for e in 1..=max_level {
        let q = p
            .checked_pow(e)
            .ok_or_else(|| Error::resource("Frobenius power overflows"))?;
        let (xq, gens) = match mode {
            TcMode::Bracket => (x.frobenius(e)?, frobenius_all(ideal, e)?),
            TcMode::Ordinary { element, ideal: ip } => {
                let k = ip.eval(q)? as usize;
                (x.pow(element.eval(q)?)?, power_products(ideal, k)?)
            }
        };
        let containment = Containment {
            element: c.try_mul(&xq)?,
            ideal: gens,
            q,
        };
        let passed = containment.replay(oracle)?;
        levels.push(LevelCheck {
            e,
            q,
            passed,
            containment,
        });
    }
    Ok(TightClosureCertificate {
        multiplier: c.clone(),
        element: x.clone(),
        ideal: ideal.to_vec(),
        mode,
        levels,
    })
}
