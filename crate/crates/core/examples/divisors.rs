//! Section rings of Q-divisors on the projective line.

use fsing::demazure::{
    floor_divisor, fractional_part, same_fregularity_class, section_ring_profile, veronese_divisor, QDivisor,
};

fn main() -> fsing::Result<()> {
    let d = QDivisor::parse(&[("VS", "-1/2"), ("VT", "1/3"), ("VST", "1/5")])?;
    println!("D = {d}, deg D = {}", d.degree());
    println!("dim H^0(nD), n = 0..=30: {:?}", section_ring_profile(&d, 30)?);
    let f = floor_divisor(&d, 7);
    println!("floor(7D) = {:?}, degree {}", f.components, f.degree);
    println!("fractional part D' = {}", fractional_part(&d));

    for n in [2, 3, 5, 7, 11, 31] {
        let nd = veronese_divisor(&d, n)?;
        println!("n = {n:>2}: same class as D: {}", same_fregularity_class(&nd, &d)?);
    }

    let e = QDivisor::parse(&[("VS", "1/2"), ("VT", "1/3"), ("VST", "1/5")])?;
    println!("\nE = {e}: profile {:?}", section_ring_profile(&e, 20)?);
    println!("E and D share a fractional part: {}", same_fregularity_class(&e, &d)?);
    Ok(())
}
