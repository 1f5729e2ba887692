//! Exact commutative algebra over prime fields for deciding Frobenius-theoretic properties
//! of graded rings at desk scale.
//!
//! The crate is organized bottom-up:
//!
//! - [`field`], [`ring`], [`poly`], [`parse`]: `F_p` arithmetic, weighted polynomial rings,
//!   sparse polynomials and their text form.
//! - [`groebner`]: Buchberger's algorithm, normal forms, intersections, colon ideals,
//!   bracket powers `I^[q]` and ordinary powers.
//! - [`frobenius`]: bounded Frobenius closure search, Fedder-type F-purity tests and
//!   bounded tight-closure certificates.
//! - [`hilbert`]: exact Hilbert series, graded local cohomology dimensions, a-invariants,
//!   multiplicities and Veronese transforms.
//! - [`subring`]: graded subalgebras handled by linear algebra over `F_p`.
//! - [`demazure`]: Q-divisors on the projective line and their section rings.
//! - [`localcoh`]: Čech classes in top local cohomology and the Frobenius action on them.
//! - [`manifest`], [`checks`], [`report`], [`corpus`], [`cli`]: the batch front end.

pub mod checks;
pub mod cli;
pub mod corpus;
pub mod demazure;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod hilbert;
pub mod localcoh;
pub mod manifest;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ring;
pub mod subring;

pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use groebner::{Ideal, QuotientRing};
pub use hilbert::HilbertSeries;
pub use parse::parse_poly;
pub use poly::{Degree, Polynomial};
pub use ring::{Monomial, MonomialOrder, WeightedRing};
