//! The four-interval exchange on the horizontal diagonal: division points,
//! the images, and the Roman orbit words.

use pentaflow::directions::{coordinate_of_index, DirectionIndex};
use pentaflow::orbits::{orbit_of_index, roman_of_arabic, OrbitKind};
use pentaflow::tracer::{iet_build, iet_orbits, iet_parameter_of};

fn main() {
    for idx in [DirectionIndex::of(&[2]), DirectionIndex::of(&[1]), DirectionIndex::of(&[1, 3])] {
        let x = coordinate_of_index(&idx).as_finite().cloned().unwrap();
        let u = iet_parameter_of(&x);
        let spec = iet_build(&u).unwrap();
        println!("{idx}: u = {u}");
        for (k, p) in spec.division_points.iter().enumerate() {
            println!("  p{} = {p}", k + 1);
        }
        println!("  images tile the domain: {}", spec.images_tile_domain());
        let mut words: Vec<String> = iet_orbits(&spec, 2_000).iter().map(|w| w.to_string()).collect();
        words.sort();
        println!("  orbits: {words:?}");
        for kind in [OrbitKind::Short, OrbitKind::Long] {
            println!("  {kind:?} from the recursion: {}", roman_of_arabic(&orbit_of_index(&idx, kind)).unwrap());
        }
    }
}
