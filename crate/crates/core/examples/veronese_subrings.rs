//! Graded subrings by linear algebra: Veronese Hilbert functions and a presentation.

use fsing::groebner::StepBudget;
use fsing::subring::{
    equal_degree_generation_check, subring_hilbert_function, subring_presentation, veronese_generators,
    GradedSubalgebra,
};
use fsing::{QuotientRing, WeightedRing};

fn main() -> fsing::Result<()> {
    let s = WeightedRing::standard(7, &["X", "Y", "Z"])?;
    let q = QuotientRing::parse(&s, &["X^3 - Y*Z*(Y + Z)"])?;
    let r3 = GradedSubalgebra::parse(&q, &["X^3", "Y^3", "Y^2*Z", "Y*Z^2", "Z^3"], 3)?;
    println!(
        "K[X^3, Y^3, Y^2 Z, Y Z^2, Z^3]: {:?}",
        subring_hilbert_function(&r3, 8)?
    );

    let ring = WeightedRing::new(5, &["T", "U", "V", "W"], &[1, 4, 4, 4])?;
    let q = QuotientRing::parse(&ring, &["T^8 - U*V", "T^4*(V - W) - V*W", "U*(V - W) - T^4*W"])?;
    let gens = veronese_generators(&q, 4)?;
    let names: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    println!("\nR^(4) generated by {}", names.join(", "));
    let r4 = GradedSubalgebra::new(&q, gens, 4)?;
    println!("R^(4) Hilbert function: {:?}", subring_hilbert_function(&r4, 8)?);
    println!("generated in degree 4: {}", equal_degree_generation_check(&q, 4, 4)?);

    let a = GradedSubalgebra::parse(&q, &["T^4", "U", "V", "W"], 4)?;
    let relations = subring_presentation(&a, &["S", "U", "V", "W"], &mut StepBudget::default())?;
    println!("relations among S = T^4, U, V, W:");
    for g in relations.basis() {
        println!("  {g}");
    }
    Ok(())
}
