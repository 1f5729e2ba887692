//! Čech classes in top local cohomology and the action of Frobenius on them.

use fsing::localcoh::{class_degree, frobenius_class, is_zero_class, CechClass, ZeroTest};
use fsing::{QuotientRing, WeightedRing};

fn main() -> fsing::Result<()> {
    let ring = WeightedRing::new(2, &["x", "y", "z"], &[15, 10, 6])?;
    let q = QuotientRing::parse(&ring, &["x^2 + y^3 + z^5"])?;

    println!("{:<16} {:>6}  F(class)", "class", "degree");
    for (num, a, b) in [
        ("1", 1, 1),
        ("x", 1, 1),
        ("x", 2, 1),
        ("x", 1, 2),
        ("x", 1, 3),
        ("x", 2, 2),
        ("x", 1, 4),
    ] {
        let c = CechClass::parse(&q, &["y", "z"], num, vec![a, b])?;
        let f = frobenius_class(&c, 1)?;
        let verdict = match is_zero_class(&f, 20)? {
            ZeroTest::Zero { witness } => format!("zero (s = {witness})"),
            ZeroTest::NonzeroUpTo { bound } => format!("nonzero up to s = {bound}"),
        };
        println!("{:<16} {:>6}  {verdict}", c.to_string(), class_degree(&c)?);
    }
    Ok(())
}
