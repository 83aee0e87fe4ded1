//! Exact arithmetic in ℚ[φ]: signs without floating point, the two Möbius
//! generators and their orders.

use pentaflow::golden::{r, s_squared, t, GoldenNum, PentaNum, ProjectivePoint};

fn main() {
    let phi = GoldenNum::phi();
    println!("φ² = {}", phi.pow(2));
    println!("1/φ = {}", phi.inverse().unwrap());
    println!("norm(φ) = {}", phi.norm());

    // 13/8 is just above φ; 21/13 just below.
    for (n, d) in [(13, 8), (21, 13)] {
        let q = GoldenNum::from_ratios(n, d, 0, 1);
        println!("sign({n}/{d} - φ) = {:?}", (&q - &phi).sign());
    }
    println!("φ to 40 places: {}", phi.to_decimal(40));

    let s = PentaNum::s();
    println!("s² = {}, so s = sin 36°", s_squared());
    println!("s ≈ {}", s.to_decimal(20));

    let alpha = ProjectivePoint::Finite(&GoldenNum::one() - &phi.scale(&num_rational::BigRational::new(1.into(), 2.into())));
    println!("α = {alpha}");
    println!("T(α) = {}", t().apply(&alpha));
    println!("T⁵ is projectively the identity: {}", t().pow(5).is_identity());
    println!("R² is projectively the identity: {}", r().pow(2).is_identity());
    let rt = r().compose(t());
    let finite_order = (1..=100).any(|k| rt.pow(k).is_identity());
    println!("R·T has a power ≤ 100 equal to the identity: {finite_order}");
}
