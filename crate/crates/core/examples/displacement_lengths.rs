//! Displacement vectors and exact squared lengths of the orbits.

use pentaflow::analysis::length_report;
use pentaflow::directions::DirectionIndex;

fn main() {
    for idx in DirectionIndex::all_to_generation(2) {
        let r = length_report(&idx);
        println!(
            "{:>7}: |short|² = {:<16} |short| ≈ {}  long/short = φ: {}  closed form: {}",
            idx.to_string(),
            r.short_length_squared.to_string(),
            r.short_length,
            r.ratio_is_phi,
            r.closed_form_holds
        );
    }
    let r = length_report(&DirectionIndex::of(&[2]));
    println!("\n{}", serde_json::to_string_pretty(&r).unwrap());
}
