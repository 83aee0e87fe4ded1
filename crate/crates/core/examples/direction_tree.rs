//! The tree of periodic directions: coordinates by generation, the inverse
//! search, and the neighbour family of a vertex.

use pentaflow::directions::{coordinate_of_index, index_of_coordinate, neighbor_depth_needed, neighbor_family, DirectionIndex};

fn main() {
    for g in 0..=2 {
        let all = DirectionIndex::all_to_generation(g);
        println!("through generation {g}: {} directions", all.len());
    }
    println!();
    for idx in DirectionIndex::all_to_generation(2) {
        let x = coordinate_of_index(&idx);
        let back = index_of_coordinate(&x, 32).unwrap();
        println!("{:>8}  x = {:<22} ≈ {:>10.6}  round trip {}", idx.to_string(), x.to_string(), x.as_finite().unwrap().to_f64(), back == idx);
    }

    let beta = DirectionIndex::of(&[1]);
    let fam = neighbor_family(&beta, 2, neighbor_depth_needed(&beta, 2)).unwrap();
    println!("\nneighbours of {beta}:");
    for n in &fam.members {
        println!("  γ{:<3} {}", n.i, n.index);
    }
}
