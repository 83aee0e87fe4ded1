//! Recovers the side labels and the orbit recursion conventions from the
//! flow tracer alone.

use pentaflow::calibration::calibrate;

fn main() {
    let t = calibrate(2, 20_000).expect("every direction traces");
    println!("{}", t.summary());
    println!();
    for w in t.winners() {
        println!("zero mismatches: labels {:?}, convention {:?}", w.labels, w.convention);
    }
    println!("frozen pair is the unique winner with α short = 2 5: {}", t.frozen_is_unique_winner());
}
