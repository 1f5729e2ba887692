//! F-purity by Fedder's criterion, for a hypersurface and a squarefree monomial ideal.

use fsing::frobenius::{fedder_fpure, pruned_power};
use fsing::{QuotientRing, WeightedRing};

fn main() -> fsing::Result<()> {
    for p in [2, 3, 5, 7, 11] {
        let ring = WeightedRing::new(p, &["x", "y", "z"], &[15, 10, 6])?;
        let q = QuotientRing::parse(&ring, &["x^2 + y^3 + z^5"])?;
        let r = fedder_fpure(&q)?;
        let witness = r.witness.map(|w| w.to_string()).unwrap_or_else(|| "-".into());
        println!("x^2+y^3+z^5, p = {p:>2}: F-pure {:<5} witness {witness}", r.f_pure);
    }

    let ring = WeightedRing::new(7, &["x", "y", "z"], &[15, 10, 6])?;
    let f = fsing::parse_poly("x^2 + y^3 + z^5", &ring)?;
    println!("\nf^6 with terms in (x^7, y^7, z^7) dropped: {}", pruned_power(&f, 7)?);

    for p in [2, 3, 5] {
        let ring = WeightedRing::standard(p, &["A", "B", "C"])?;
        let q = QuotientRing::parse(&ring, &["A*B", "B*C", "C*A"])?;
        let r = fedder_fpure(&q)?;
        println!(
            "(AB, BC, CA), p = {p}: F-pure {} via {:?}, witness {}",
            r.f_pure,
            r.method,
            r.witness.unwrap()
        );
    }
    Ok(())
}
