//! Frobenius closure of (y, z) in K[x,y,z]/(x^2 + y^3 + z^5) as the characteristic varies.

use fsing::frobenius::{frobenius_closure_member, ClosureStatus};
use fsing::{QuotientRing, WeightedRing};

fn main() -> fsing::Result<()> {
    println!("{:>3}  {:<22} witness", "p", "x in (y, z)^F");
    for p in [2, 3, 5, 7, 11, 13] {
        let ring = WeightedRing::new(p, &["x", "y", "z"], &[15, 10, 6])?;
        let q = QuotientRing::parse(&ring, &["x^2 + y^3 + z^5"])?;
        let x = q.parse_poly("x")?;
        let ideal = q.parse_polys(&["y", "z"])?;
        let verdict = frobenius_closure_member(&x, &ideal, &q, 2)?;
        let status = match &verdict.status {
            ClosureStatus::MemberAtLevel(e) => format!("member at e = {e}"),
            ClosureStatus::NonMemberUpTo(e) => format!("not up to e = {e}"),
            ClosureStatus::Inconclusive(why) => format!("inconclusive: {why}"),
        };
        let witness = verdict.witness.map(|w| w.to_string()).unwrap_or_default();
        println!("{p:>3}  {status:<22} {witness}");
    }
    Ok(())
}
