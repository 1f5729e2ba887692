//! Tight closure certificates: bracket powers in a Veronese subring, and ordinary powers in
//! a subring generated in a single degree.

use fsing::frobenius::{tc_certificate, ExponentRule, TcMode};
use fsing::groebner::quotient_member;
use fsing::hilbert::multiplicity;
use fsing::subring::{subring_hilbert_function, veronese_generators, GradedSubalgebra};
use fsing::{HilbertSeries, Polynomial, QuotientRing, WeightedRing};

fn main() -> fsing::Result<()> {
    for p in [2, 3, 5] {
        let ring = WeightedRing::new(p, &["x", "y", "z"], &[15, 10, 6])?;
        let q = QuotientRing::parse(&ring, &["x^2 + y^3 + z^5"])?;
        let v = GradedSubalgebra::new(&q, veronese_generators(&q, 7)?, 7)?;
        let x = q.parse_poly("x^2*y^4*z^7")?;
        let i = q.parse_polys(&["x*y^5*z^2", "x*z^8"])?;
        let cert = tc_certificate(&Polynomial::one(&ring), &x, &i, &v, 2, TcMode::Bracket)?;
        println!(
            "p = {p}: x in I: {}, certificate passes: {}",
            quotient_member(&x, &i, &q)?,
            cert.all_passed()
        );
        for level in &cert.levels {
            println!("    {}", level.containment);
        }
    }

    let ring = WeightedRing::standard(2, &["s", "t", "x1", "x2", "x3"])?;
    let q = QuotientRing::parse(&ring, &["s*x1*x2*x3 - t*(x1^3 + x2^3 + x3^3)"])?;
    let a = GradedSubalgebra::parse(&q, &["s*x1", "s*x2", "s*x3", "t*x1", "t*x2", "t*x3"], 2)?;
    let hf = subring_hilbert_function(&a, 8)?;
    let e = multiplicity(&HilbertSeries::from_hilbert_function(&hf, 3)?, 3)?;
    println!("\nsubring Hilbert function {hf:?}, multiplicity {}", e.value);
    let x = q.parse_poly("t*x3")?;
    let i = q.parse_polys(&["s*x1", "s*x2", "t*x1", "t*x2"])?;
    // c = 1, (t x3)^(2q + 2) in I^q
    let mode = TcMode::Ordinary {
        element: ExponentRule::new(2, 2),
        ideal: ExponentRule::new(1, 0),
    };
    let cert = tc_certificate(&Polynomial::one(&ring), &x, &i, &a, 2, mode)?;
    for level in &cert.levels {
        println!("q = {}: {}", level.q, if level.passed { "passed" } else { "failed" });
    }
    Ok(())
}
