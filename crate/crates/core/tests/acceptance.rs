//! Acceptance run: one PASS/FAIL line per criterion, with timings and the
//! findings behind every failure. Exits nonzero when a blocking criterion
//! fails. Criterion 10 concerns open conjectures and is reported but never
//! blocks.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use pentaflow::analysis::{
    check_conjecture_concat, check_conjecture_splitting, displacement, length_identity_holds, orbit_length_squared, pinned_case,
};
use pentaflow::cli::{arcs_through, billiard_check_result};
use pentaflow::directions::{coordinate_of_index, in_sector, index_of_coordinate, neighbor_depth_needed, DirectionError, DirectionIndex};
use pentaflow::golden::{GoldenNum, PentaNum, ProjectivePoint};
use pentaflow::orbits::{
    apply_m, enhance, m_squared_and_m_plus_i, Convention, orbit_of_index, reduce, roman_of_arabic, rotate_alphabet, vector_of, Alphabet,
    CyclicWord, OrbitKind, OrbitVector,
};
use pentaflow::periods::{arithmetic_family_check, period_of_index, PeriodPair};
use pentaflow::tracer::{iet_build, strip_orbits, SurfaceChart};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET: usize = 20_000;

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.pass = false;
        }
        self.notes.push(format!("{} {}", if ok { "ok  " } else { "FAIL" }, note.into()));
    }

    fn info(&mut self, note: impl Into<String>) {
        self.notes.push(format!("     {}", note.into()));
    }
}

fn w(s: &str) -> CyclicWord {
    s.parse().expect("word literal")
}

fn idx(d: &[u8]) -> DirectionIndex {
    DirectionIndex::of(d)
}

fn within(limit: Duration, t: Duration) -> bool {
    t <= limit
}

fn c1_period_table() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let rows: [(&[u8], u64, u64); 9] = [
        (&[], 1, 1),
        (&[0, 1], 3, 5),
        (&[0, 2], 4, 7),
        (&[0, 3], 4, 6),
        (&[1], 2, 3),
        (&[1, 1], 5, 9),
        (&[1, 2], 7, 11),
        (&[1, 3], 6, 9),
        (&[2], 2, 4),
    ];
    for (d, a, b) in rows {
        let got = period_of_index(&idx(d));
        o.check(got == PeriodPair::new(a, b), format!("{} -> {got}", idx(d)));
    }
    let el = t.elapsed();
    o.check(within(Duration::from_secs(1), el), format!("time {el:?} < 1 s"));
    o
}

fn c2_deep_period() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let deep = idx(&[1, 2, 3, 1, 2, 3, 1, 2, 3]);
    let got = period_of_index(&deep);
    let el = t.elapsed();
    o.check(got.short == BigUint::from(3932u32) && got.long == BigUint::from(6334u32), format!("{deep} -> {got}, printed (3932, 6334)"));
    o.check(within(Duration::from_secs(1), el), format!("time {el:?} < 1 s"));
    if got.long != BigUint::from(6334u32) {
        let roman = |k| roman_of_arabic(&orbit_of_index(&deep, k)).map(|w| w.len()).unwrap_or(0);
        o.info(format!("symbolic orbit lengths: {} and {}", roman(OrbitKind::Short), roman(OrbitKind::Long)));
        let s = vector_of(&orbit_of_index(&deep, OrbitKind::Short)).expect("word");
        o.info(format!("long = M·short gives {}", apply_m(s).period()));
        match strip_orbits(&SurfaceChart::default(), &coordinate_of_index(&deep), 4 * BUDGET) {
            Ok(so) => o.info(format!("flow tracer: {} and {} crossings, i.e. periods {} and {}",
                so.short.crossings, so.long.crossings, so.short.crossings / 2, so.long.crossings / 2)),
            Err(e) => o.info(format!("flow tracer: {e}")),
        }
    }
    o
}

fn c3_orbit_examples() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let ours = orbit_of_index(&idx(&[0, 3]), OrbitKind::Short);
    let printed = w("4 3 2 3 4 1 4 1");
    o.check(ours == printed, format!("short orbit of (0,3) is {ours}, printed example {printed}"));
    if ours != printed {
        let mirror = orbit_of_index(&idx(&[3, 1]), OrbitKind::Short);
        o.info(format!("the printed word is the orbit of the mirror direction (3,1): {mirror}; equal: {}", mirror == printed));
        o.info(format!("and the image of ours under x -> 6 - x: {}", ours.mirror() == printed));
    }
    let rows: [(u8, &[u8]); 4] = [
        (1, &[5, 2, 3, 4, 3, 4, 3, 2, 5, 2, 5, 2]),
        (2, &[1, 4, 3, 2, 5, 2, 3, 4, 3, 2, 5, 2, 3, 4, 1, 4, 3, 4, 1, 4, 3, 4]),
        (3, &[2, 3, 4, 1, 4, 3, 2, 5, 2, 3, 4, 1, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3]),
        (4, &[3, 2, 3, 4, 1, 4, 3, 2, 3, 2, 5, 2, 3, 2, 5, 2]),
    ];
    for (j, want) in rows {
        let got = rotate_alphabet(&printed, j).and_then(|r| enhance(&r));
        o.check(got.as_ref().map(|g| g.symbols() == want).unwrap_or(false), format!("rotate by {j} then enhance"));
    }
    let red = reduce(&w("5 2 3 4 3 2 3 4 3 2"));
    o.check(red.as_ref().ok() == Some(&w("4 2 4 5")), "reduce 5 2 3 4 3 2 3 4 3 2 = 4 2 4 5");
    let el = t.elapsed();
    o.check(within(Duration::from_secs(1), el), format!("time {el:?} < 1 s"));
    o
}

fn c4_vector_list() -> Outcome {
    let mut o = Outcome::new();
    let list: [(DirectionIndex, OrbitVector, OrbitVector); 5] = [
        (DirectionIndex::alpha(), OrbitVector::new(0, 0, 1, 0), OrbitVector::new(1, 0, 0, 0)),
        (idx(&[1]), OrbitVector::new(1, 1, 0, 0), OrbitVector::new(1, 0, 1, 1)),
        (idx(&[2]), OrbitVector::new(1, 0, 0, 1), OrbitVector::new(1, 1, 1, 1)),
        (idx(&[3]), OrbitVector::new(0, 0, 1, 1), OrbitVector::new(1, 1, 0, 1)),
        (DirectionIndex::bottom(), OrbitVector::new(0, 1, 0, 0), OrbitVector::new(0, 0, 0, 1)),
    ];
    for (i, s, l) in list {
        let gs = vector_of(&orbit_of_index(&i, OrbitKind::Short)).ok();
        let gl = vector_of(&orbit_of_index(&i, OrbitKind::Long)).ok();
        o.check(gs == Some(s) && gl == Some(l), format!("{i}: {gs:?} {gl:?}"));
    }
    o
}

fn c5_oracle() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let chart = SurfaceChart::default();
    let all = DirectionIndex::all_to_generation(3);
    // Generation k ≥ 1 adds 3·4^(k-1) vertices; both ends of the sector count once.
    let expected = 2 + 3 + 12 + 48;
    o.check(all.len() == expected, format!("{} directions through generation 3 (1 + 3 + 12 + 48 + BOTTOM)", all.len()));
    o.info("the figure 84 = 4 + 16 + 64 counts 4^k new vertices per generation; each generation adds 3·4^(k-1)");
    let mut bad = Vec::new();
    for i in &all {
        let so = match strip_orbits(&chart, &coordinate_of_index(i), BUDGET) {
            Ok(s) => s,
            Err(e) => {
                bad.push(format!("{i}: {e}"));
                continue;
            }
        };
        let p = period_of_index(i).as_u64().expect("small");
        for (kind, per) in [(OrbitKind::Short, p.0), (OrbitKind::Long, p.1)] {
            let engine = orbit_of_index(i, kind);
            let traced = so.get(kind).cyclic_word();
            let roman = roman_of_arabic(&engine).map(|r| r.len() as u64);
            if traced.as_ref() != Some(&engine) || roman != Ok(per) || engine.len() as u64 != 2 * per {
                bad.push(format!("{i} {kind:?}"));
            }
        }
    }
    o.check(bad.is_empty(), format!("trace = recursion, Roman length = period, Arabic = 2 x Roman ({} mismatches)", bad.len()));
    for b in bad.iter().take(5) {
        o.info(b.clone());
    }
    let el = t.elapsed();
    o.check(within(Duration::from_secs(300), el), format!("time {el:?} < 5 min"));
    o
}

fn c6_matrix_m() -> Outcome {
    let mut o = Outcome::new();
    let (sq, pi) = m_squared_and_m_plus_i();
    o.check(sq == pi, "M² = M + I");
    let all = DirectionIndex::all_to_generation(4);
    let bad: Vec<_> = all
        .iter()
        .filter(|i| {
            let s = vector_of(&orbit_of_index(i, OrbitKind::Short)).expect("word");
            let l = vector_of(&orbit_of_index(i, OrbitKind::Long)).expect("word");
            apply_m(s) != l
        })
        .collect();
    o.check(bad.is_empty(), format!("long = M·short on {} directions through generation 4", all.len()));
    o
}

fn c7_progressions() -> Outcome {
    let mut o = Outcome::new();
    for beta in [DirectionIndex::alpha(), idx(&[1]), idx(&[2]), idx(&[3])] {
        match arithmetic_family_check(&beta, 3, neighbor_depth_needed(&beta, 3)) {
            Ok(r) => o.check(true, format!("{beta}: difference ({}, {}), i in {:?}", r.difference.0, r.difference.1, r.verified_range)),
            Err(e) => o.check(false, format!("{beta}: {e}")),
        }
    }
    o
}

fn c8_lengths() -> Outcome {
    let mut o = Outcome::new();
    let chart = SurfaceChart::default();
    let phi = PentaNum::from_golden(GoldenNum::phi());
    let mut bad = Vec::new();
    let all = DirectionIndex::all_to_generation(3);
    for i in &all {
        let x = coordinate_of_index(i).as_finite().cloned().expect("finite");
        let s = vector_of(&orbit_of_index(i, OrbitKind::Short)).expect("word");
        let l = vector_of(&orbit_of_index(i, OrbitKind::Long)).expect("word");
        let mut ok = length_identity_holds(&s, &x) && length_identity_holds(&l, &x);
        ok &= displacement(&l) == displacement(&s).scale(&phi);
        ok &= orbit_length_squared(&l) == &GoldenNum::phi().pow(2) * &orbit_length_squared(&s);
        // The traced displacement must agree with the formula too.
        match strip_orbits(&chart, &coordinate_of_index(i), BUDGET) {
            Ok(so) => {
                ok &= so.short.displacement == displacement(&s) && so.long.displacement == displacement(&l);
            }
            Err(_) => ok = false,
        }
        if !ok {
            bad.push(i.to_string());
        }
    }
    o.check(bad.is_empty(), format!("{} directions, failures: {:?}", all.len(), bad));
    o
}

fn c9_billiard() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let chart = SurfaceChart::default();
    let all = DirectionIndex::all_to_generation(2);
    let mut bad = Vec::new();
    for i in &all {
        match billiard_check_result(&chart, i, BUDGET) {
            Ok((true, _)) => {}
            Ok((false, d)) => bad.push(format!("{i}: {d}")),
            Err(e) => bad.push(format!("{i}: {e}")),
        }
    }
    o.check(bad.is_empty(), format!("{} directions, failures: {:?}", all.len(), bad));
    let el = t.elapsed();
    o.check(within(Duration::from_secs(600), el), format!("time {el:?} < 10 min"));
    o
}

fn c10_conjectures() -> Outcome {
    let mut o = Outcome::new();
    let arcs = arcs_through(3);
    let mut concat_fail = Vec::new();
    for (a, b) in &arcs {
        let r = check_conjecture_concat(a, b, Alphabet::Arabic);
        if !r.pass() {
            concat_fail.push(r.subject.clone());
        }
    }
    o.check(concat_fail.is_empty(), format!("concatenation pattern on {} arcs, failures {:?}", arcs.len(), concat_fail));
    let centres = DirectionIndex::all_to_generation(3);
    let mut split_fail = Vec::new();
    for c in &centres {
        match check_conjecture_splitting(c, 2, Alphabet::Arabic) {
            Ok(r) if r.pass() => {}
            Ok(r) => split_fail.push(r.subject.clone()),
            Err(e) => split_fail.push(format!("{c}: {e}")),
        }
    }
    o.check(split_fail.is_empty(), format!("splitting pattern on {} centres (radius 2), failures {:?}", centres.len(), split_fail));
    if !split_fail.is_empty() {
        o.info("the two ends of the sector only have one-sided families; the pattern needs both sides");
    }
    let p = pinned_case();
    o.check(p.pieces_consistent, "worked example: displayed pieces are mutually consistent");
    o.check(p.literal_centre && p.literal_gamma1, "worked example: words are the orbits of (1,1) and (1,1,1)");
    o.info(format!("worked example at the mirror directions (2,3), (2,2,3): {}", p.mirror_centre && p.mirror_gamma1));
    o
}

fn random_golden(rng: &mut ChaCha8Rng, bound: i64) -> GoldenNum {
    let mut q = || (rng.gen_range(-bound..=bound), rng.gen_range(1..=bound));
    let (an, ad) = q();
    let (bn, bd) = q();
    GoldenNum::from_ratios(an, ad, bn, bd)
}

fn c11_properties() -> Outcome {
    let mut o = Outcome::new();

    // The words the recursion enhances: each predecessor orbit after its shift.
    let mut count = 0;
    let mut ok = true;
    for i in DirectionIndex::all_to_generation(3) {
        let step = Convention::FROZEN
            .predecessor(&i)
            .or_else(|| i.is_bottom().then(|| (DirectionIndex::alpha(), 4)));
        let Some((pred, j)) = step else { continue };
        for kind in [OrbitKind::Short, OrbitKind::Long] {
            let r = rotate_alphabet(&orbit_of_index(&pred, kind), j).expect("Arabic");
            count += 1;
            ok &= enhance(&r).and_then(|e| reduce(&e)).ok() == Some(r);
        }
    }
    o.check(ok, format!("reduce(enhance(w)) = w on the {count} shifted predecessor orbits through generation 3"));

    let mut rng = ChaCha8Rng::seed_from_u64(0x1e7);
    let limit = &GoldenNum::one() - &GoldenNum::from_ratios(0, 1, 1, 2);
    let mut tested = 0;
    let mut iet_ok = true;
    while tested < 20 {
        let u = random_golden(&mut rng, 12);
        if u.abs() > limit {
            continue;
        }
        tested += 1;
        let Ok(spec) = iet_build(&u) else {
            iet_ok = false;
            continue;
        };
        iet_ok &= spec.images_tile_domain();
        for k in 0..40 {
            let x = GoldenNum::phi().scale(&num_rational::BigRational::new((2 * k + 1).into(), 80.into()));
            let back = spec.apply(&x).and_then(|(_, y)| spec.apply_inverse(&y)).map(|(_, z)| z);
            iet_ok &= back.as_ref() == Some(&x);
        }
    }
    o.check(iet_ok, format!("IET images tile [0, φ) and invert on 40 points, for {tested} sampled u"));

    let all = DirectionIndex::all_to_generation(4);
    let round = all.iter().all(|i| index_of_coordinate(&coordinate_of_index(i), 16).as_ref() == Ok(i));
    o.check(round, format!("index -> coordinate -> index on {} directions through generation 4", all.len()));

    let mut rng = ChaCha8Rng::seed_from_u64(60);
    let mut samples = Vec::new();
    while samples.len() < 100 {
        let x = random_golden(&mut rng, 50);
        if in_sector(&ProjectivePoint::Finite(x.clone())) {
            samples.push(x);
        }
    }
    let mut over = 0;
    let mut longest = 0;
    let mut unresolved = 0;
    for x in &samples {
        let p = ProjectivePoint::Finite(x.clone());
        match index_of_coordinate(&p, 60) {
            Ok(_) => {}
            Err(DirectionError::DepthExceeded { .. }) => {
                over += 1;
                match index_of_coordinate(&p, 5000) {
                    Ok(i) => longest = longest.max(i.digits().len()),
                    Err(_) => unresolved += 1,
                }
            }
            Err(_) => unresolved += 1,
        }
    }
    o.check(over == 0 && unresolved == 0, format!("100 bounded-height samples resolve within depth 60 ({over} need more)"));
    o.info(format!("with depth 5000: {} of 100 resolve, longest index {longest} digits", 100 - unresolved));
    o
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome, bool); 11] = [
        (1, "period table", c1_period_table, true),
        (2, "deep period", c2_deep_period, true),
        (3, "orbit examples", c3_orbit_examples, true),
        (4, "vector list", c4_vector_list, true),
        (5, "recursion vs flow tracer", c5_oracle, true),
        (6, "matrix M", c6_matrix_m, true),
        (7, "arithmetic progressions", c7_progressions, true),
        (8, "lengths and displacements", c8_lengths, true),
        (9, "billiard lengths", c9_billiard, true),
        (10, "conjectured patterns (advisory)", c10_conjectures, false),
        (11, "property suites", c11_properties, true),
    ];
    let mut blocking_failures = Vec::new();
    for (n, name, f, blocking) in criteria {
        let t = Instant::now();
        let r = f();
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        println!("criterion {n} ({name}): {verdict} [{:.2?}]", t.elapsed());
        for note in &r.notes {
            println!("    {note}");
        }
        if !r.pass && blocking {
            blocking_failures.push(n);
        }
    }
    if blocking_failures.is_empty() {
        println!("acceptance: all blocking criteria pass");
    } else {
        println!("acceptance: blocking failures in criteria {blocking_failures:?}");
        std::process::exit(1);
    }
}
