//! Gröbner bases, normal forms and ideal membership in a quotient ring.

use fsing::groebner::{ideal_quotient, quotient_member};
use fsing::{Ideal, QuotientRing, WeightedRing};

fn main() -> fsing::Result<()> {
    let ring = WeightedRing::standard(2, &["x0", "x1", "x2", "x3"])?;
    let q = QuotientRing::parse(&ring, &["x0^3 + x1^3 + x2^3 + x3^3"])?;

    let squares = q.parse_polys(&["x1^2", "x2^2", "x3^2"])?;
    let x0_4 = q.parse_poly("x0^4")?;
    println!("x0^4 in (x1^2, x2^2, x3^2): {}", quotient_member(&x0_4, &squares, &q)?);
    let linear = q.parse_polys(&["x1", "x2", "x3"])?;
    println!(
        "x0^2 in (x1, x2, x3):       {}",
        quotient_member(&q.parse_poly("x0^2")?, &linear, &q)?
    );

    let lifted = q.lift(&squares)?;
    println!("\nGröbner basis of the lifted ideal:");
    for g in lifted.basis() {
        println!("  {g}");
    }
    println!("normal form of x0^4: {}", lifted.normal_form(&x0_4)?);

    let plane = WeightedRing::standard(5, &["x", "y"])?;
    let i = Ideal::parse(&plane, &["x^2*y", "x*y^2"])?;
    let j = Ideal::parse(&plane, &["x", "y"])?;
    let colon = ideal_quotient(&i, &j)?;
    let gens: Vec<String> = colon.basis().iter().map(|g| g.to_string()).collect();
    println!("\n(x^2 y, x y^2) : (x, y) = ({})", gens.join(", "));
    Ok(())
}
