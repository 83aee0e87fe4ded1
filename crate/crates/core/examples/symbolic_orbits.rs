//! Symbolic orbits: rotation and enhancement, reduction, Roman coding, orbit
//! vectors and the matrix M.

use pentaflow::directions::DirectionIndex;
use pentaflow::orbits::{apply_m, enhance, orbit_of_index, reduce, roman_of_arabic, rotate_alphabet, vector_of, CyclicWord, OrbitKind};

fn main() {
    let w: CyclicWord = "4 3 2 3 4 1 4 1".parse().unwrap();
    for j in 1..=4 {
        let r = rotate_alphabet(&w, j).unwrap();
        println!("shift {j}: {r:<18} enhanced: {}", enhance(&r).unwrap());
    }
    let long: CyclicWord = "5 2 3 4 3 2 3 4 3 2".parse().unwrap();
    println!("reduce({long}) = {}", reduce(&long).unwrap());

    println!();
    for idx in DirectionIndex::all_to_generation(1) {
        let s = orbit_of_index(&idx, OrbitKind::Short);
        let l = orbit_of_index(&idx, OrbitKind::Long);
        let (vs, vl) = (vector_of(&s).unwrap(), vector_of(&l).unwrap());
        println!(
            "{:>7}: short {:<10} [{}] {vs}   long {:<14} [{}] {vl}   M·short = long: {}",
            idx.to_string(),
            s.to_string(),
            roman_of_arabic(&s).unwrap(),
            l.to_string(),
            roman_of_arabic(&l).unwrap(),
            apply_m(vs) == vl
        );
    }
}
