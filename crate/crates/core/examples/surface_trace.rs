//! The flow oracle: trace both strips of a direction on the double pentagon
//! with exact arithmetic and compare with the symbolic recursion.

use pentaflow::directions::{coordinate_of_index, DirectionIndex};
use pentaflow::orbits::{orbit_of_index, OrbitKind};
use pentaflow::tracer::{strip_orbits, SurfaceChart};

fn main() {
    let chart = SurfaceChart::default();
    for digits in [&[][..], &[2], &[0, 3], &[1, 2, 3]] {
        let idx = DirectionIndex::of(digits);
        let so = strip_orbits(&chart, &coordinate_of_index(&idx), 20_000).expect("periodic direction");
        for kind in [OrbitKind::Short, OrbitKind::Long] {
            let tr = so.get(kind);
            let word = tr.cyclic_word().unwrap();
            println!(
                "{:>8} {kind:?}: {} crossings, closed {}, matches recursion {}",
                idx.to_string(),
                tr.crossings,
                tr.closed,
                word == orbit_of_index(&idx, kind)
            );
        }
        let (dx, dy) = so.short.displacement.to_f64();
        println!("          short displacement ≈ ({dx:.6}, {dy:.6})");
    }
}
