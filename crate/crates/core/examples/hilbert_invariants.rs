//! Hilbert series, a-invariant, top local cohomology and Veronese a-invariants.

use fsing::hilbert::{a_invariant, hd_graded_dims, hilbert_series, multiplicity, veronese_series};
use fsing::{QuotientRing, WeightedRing};

fn main() -> fsing::Result<()> {
    let ring = WeightedRing::new(2, &["x", "y", "z"], &[15, 10, 6])?;
    let q = QuotientRing::parse(&ring, &["x^2 + y^3 + z^5"])?;
    let h = hilbert_series(&q)?;
    println!("H(t) = {h}");
    let coeffs: Vec<String> = h.coefficients(31).iter().map(|c| c.to_string()).collect();
    println!("dims 0..=30: {}", coeffs.join(" "));
    println!("a(R) = {}", a_invariant(&q)?);
    let e = multiplicity(&h, 2)?;
    println!(
        "multiplicity {}{}",
        e.value,
        if e.weighted { " (weighted)" } else { "" }
    );

    let table = hd_graded_dims(&h, 2, -20)?;
    let nonzero: Vec<String> = (-20..=0)
        .filter(|&j| table.get(j) != 0.into())
        .map(|j| format!("{j}:{}", table.get(j)))
        .collect();
    println!("dim H^2_m(R)_j for j in [-20, 0]: {}", nonzero.join(" "));

    for n in [2, 3, 4, 5, 6, 7, 30] {
        let v = veronese_series(&h, n, 8)?;
        let stream: Vec<String> = v.stream.iter().map(|c| c.to_string()).collect();
        println!(
            "R^({n:>2}): a = {:>3?}  dims {}",
            v.a_invariant.unwrap(),
            stream.join(" ")
        );
    }
    Ok(())
}
