//! Experimental checks of two patterns in the symbolic orbits: how the orbits
//! of new directions are cut and glued from the orbits of the arc ends, and
//! how orbits split along a neighbour family.

use pentaflow::analysis::{check_conjecture_concat, check_conjecture_splitting, pinned_case};
use pentaflow::cli::arcs_through;
use pentaflow::directions::DirectionIndex;
use pentaflow::orbits::Alphabet;

fn main() {
    let arcs = arcs_through(3);
    let failed: Vec<String> =
        arcs.iter().map(|(a, b)| check_conjecture_concat(a, b, Alphabet::Arabic)).filter(|r| !r.pass()).map(|r| r.subject).collect();
    println!("concatenation: {} arcs, failures {failed:?}", arcs.len());

    let r = check_conjecture_concat(&DirectionIndex::alpha(), &DirectionIndex::of(&[1]), Alphabet::Arabic);
    for v in &r.verdicts {
        println!("  {} {:?}", v.case, v.witness);
    }

    let centres = DirectionIndex::all_to_generation(3);
    let mut failed = Vec::new();
    for c in &centres {
        let r = check_conjecture_splitting(c, 2, Alphabet::Arabic).unwrap();
        if !r.pass() {
            failed.push(c.to_string());
        }
    }
    println!("splitting: {} centres, failures {failed:?}", centres.len());
    let r = check_conjecture_splitting(&DirectionIndex::of(&[1, 1]), 2, Alphabet::Arabic).unwrap();
    println!("  (1,1): {:?} {:?}", r.verdicts[0].witness, r.verdicts[0].note);

    println!("worked example: {:#?}", pinned_case());
}
