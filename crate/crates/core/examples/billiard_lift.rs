//! Billiards in the regular pentagon: the billiard orbit is as long as the
//! surface orbit, or five times as long, depending on the orbit vector.

use pentaflow::analysis::billiard_multiplier;
use pentaflow::directions::{coordinate_of_index, DirectionIndex};
use pentaflow::golden::{GoldenNum, PentaNum};
use pentaflow::orbits::{orbit_of_index, vector_of, OrbitKind};
use pentaflow::tracer::{strip_orbits, trace_billiard, SurfaceChart};

fn main() {
    let chart = SurfaceChart::default();
    for idx in DirectionIndex::all_to_generation(1) {
        let so = strip_orbits(&chart, &coordinate_of_index(&idx), 20_000).unwrap();
        let v = vector_of(&orbit_of_index(&idx, OrbitKind::Short)).unwrap();
        let m = billiard_multiplier(&v);
        let b = trace_billiard(&chart, &so.start_point(&chart, OrbitKind::Short), &so.direction, 100_000).unwrap();
        let predicted = &so.short.travel * &PentaNum::from_golden(GoldenNum::from_integer(m as i64));
        println!(
            "{:>7}: vector {v}, multiplier {m}, {} reflections, travel matches: {}",
            idx.to_string(),
            b.crossings,
            b.travel == predicted
        );
    }
}
