//! Period pairs from the matrix product, checked against the recursion over
//! arcs, and a deep direction.

use pentaflow::directions::DirectionIndex;
use pentaflow::periods::{arithmetic_family_check, format_period_table, period_of_index, period_table, periods_by_recursion};

fn main() {
    let rows: Vec<DirectionIndex> = [&[][..], &[0, 1], &[0, 2], &[0, 3], &[1], &[1, 1], &[1, 2], &[1, 3], &[2]]
        .iter()
        .map(|d| DirectionIndex::of(d))
        .collect();
    println!("{}", format_period_table(&period_table(&rows)));

    let rec = periods_by_recursion(4);
    let agree = rec.iter().all(|(i, p)| &period_of_index(i) == p);
    println!("matrix product = arc recursion on {} directions: {agree}", rec.len());

    let deep = DirectionIndex::of(&[1, 2, 3, 1, 2, 3, 1, 2, 3]);
    println!("{deep}: {}", period_of_index(&deep));

    let report = arithmetic_family_check(&DirectionIndex::of(&[2]), 3, 5).unwrap();
    println!("\nfamily of (2): difference ({}, {})", report.difference.0, report.difference.1);
    for t in &report.terms {
        println!("  γ{:<3} {:<12} {}", t.i, t.index.to_string(), t.periods);
    }
}
