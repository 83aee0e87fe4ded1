use num_bigint::BigInt;
use num_rational::BigRational;
use pentaflow::directions::{coordinate_of_index, index_of_coordinate, DirectionIndex};
use pentaflow::golden::{GoldenNum, PentaNum, ProjectivePoint, Sign};
use pentaflow::orbits::{apply_m, enhance, orbit_of_index, reduce, roman_of_arabic, vector_of, CyclicWord, OrbitKind, OrbitVector, CHAIN};
use pentaflow::periods::{period_of_index, PeriodPair};
use pentaflow::tracer::iet_build;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-60i64..=60, 1i64..=40).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn golden() -> impl Strategy<Value = GoldenNum> {
    (small_rational(), small_rational()).prop_map(|(a, b)| GoldenNum::new(a, b))
}

fn penta() -> impl Strategy<Value = PentaNum> {
    (golden(), golden()).prop_map(|(p, q)| PentaNum::new(p, q))
}

fn index(max_gen: usize) -> impl Strategy<Value = DirectionIndex> {
    (1..=max_gen)
        .prop_flat_map(|g| (prop::collection::vec(0u8..=3, g - 1), 1u8..=3))
        .prop_map(|(mut d, last)| {
            d.push(last);
            DirectionIndex::new(d).unwrap()
        })
}

/// Words whose chain positions alternate between valleys and peaks, so every
/// symbol is a turning point.
fn turning_word() -> impl Strategy<Value = CyclicWord> {
    prop::collection::vec(0usize..4, 1..6).prop_flat_map(|valleys| {
        let n = valleys.len();
        let lows: Vec<usize> = (0..n).map(|i| valleys[i].max(valleys[(i + 1) % n])).collect();
        let peaks: Vec<BoxedStrategy<usize>> = lows.iter().map(|&lo| ((lo + 1)..5).boxed()).collect();
        (Just(valleys), peaks)
    })
    .prop_map(|(valleys, peaks)| {
        let mut symbols = Vec::new();
        for (v, p) in valleys.iter().zip(&peaks) {
            symbols.push(CHAIN[*v]);
            symbols.push(CHAIN[*p]);
        }
        CyclicWord::arabic(&symbols)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn golden_field_laws(a in golden(), b in golden(), c in golden()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), GoldenNum::one());
        }
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
    }

    #[test]
    fn golden_sign_agrees_with_fifty_digits(a in golden(), b in golden()) {
        let d = &a - &b;
        let text = d.to_decimal(50);
        let digits_nonzero = text.chars().any(|ch| ch.is_ascii_digit() && ch != '0');
        match d.sign() {
            Sign::Zero => prop_assert!(!digits_nonzero, "{}", text),
            Sign::Negative => prop_assert!(text.starts_with('-')),
            Sign::Positive => prop_assert!(!text.starts_with('-') && digits_nonzero),
        }
        prop_assert_eq!(a.cmp(&b), d.sign().to_ordering());
    }

    #[test]
    fn penta_field_laws(a in penta(), b in penta()) {
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), PentaNum::one());
        }
        prop_assert_eq!((&a - &b).sign().to_ordering(), a.cmp(&b));
    }

    #[test]
    fn json_round_trips(a in golden(), p in penta(), i in index(5), s in 1u64..1000, l in 1u64..1000) {
        let back: GoldenNum = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        prop_assert_eq!(back, a.clone());
        let back: PentaNum = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
        let back: DirectionIndex = serde_json::from_str(&serde_json::to_string(&i).unwrap()).unwrap();
        prop_assert_eq!(&back, &i);
        let w = orbit_of_index(&i, OrbitKind::Short);
        let back: CyclicWord = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
        prop_assert_eq!(back, w.clone());
        let r = roman_of_arabic(&w).unwrap();
        let back: CyclicWord = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
        let pp = PeriodPair::new(s, l);
        let back: PeriodPair = serde_json::from_str(&serde_json::to_string(&pp).unwrap()).unwrap();
        prop_assert_eq!(back, pp);
        let v = OrbitVector::new(s, l, s + l, 3);
        let back: OrbitVector = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        prop_assert_eq!(back, v);
        for x in [ProjectivePoint::Finite(a), ProjectivePoint::Infinity] {
            let back: ProjectivePoint = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
            prop_assert_eq!(back, x);
        }
    }

    #[test]
    fn index_text_and_base4_round_trip(i in index(8)) {
        prop_assert_eq!(i.to_string().parse::<DirectionIndex>().unwrap(), i.clone());
        prop_assert_eq!(DirectionIndex::from_base4(&i.base4()).unwrap(), i);
    }

    #[test]
    fn coordinate_round_trip(i in index(5)) {
        prop_assert_eq!(index_of_coordinate(&coordinate_of_index(&i), 20).unwrap(), i);
    }

    #[test]
    fn coordinates_decrease_with_base4(i in index(5), j in index(5)) {
        let (x, y) = (coordinate_of_index(&i), coordinate_of_index(&j));
        let (x, y) = (x.as_finite().unwrap(), y.as_finite().unwrap());
        prop_assert_eq!(i.base4().cmp(&j.base4()), y.cmp(x));
    }

    #[test]
    fn cyclic_equality_ignores_rotation(i in index(4), k in 0usize..64) {
        let w = orbit_of_index(&i, OrbitKind::Long);
        let r = CyclicWord::arabic(&w.rotation(k % w.len()));
        prop_assert_eq!(&r, &w);
        prop_assert_eq!(r.canonical(), w.canonical());
    }

    #[test]
    fn reduce_undoes_enhance_on_turning_words(w in turning_word()) {
        let e = enhance(&w).unwrap();
        prop_assert_eq!(reduce(&e).unwrap(), w);
    }

    #[test]
    fn periods_match_orbits_and_m(i in index(6)) {
        let s = orbit_of_index(&i, OrbitKind::Short);
        let l = orbit_of_index(&i, OrbitKind::Long);
        let p = period_of_index(&i);
        let lens = (roman_of_arabic(&s).unwrap().len() as u64, roman_of_arabic(&l).unwrap().len() as u64);
        prop_assert_eq!(p.as_u64(), Some(lens));
        prop_assert_eq!(apply_m(vector_of(&s).unwrap()), vector_of(&l).unwrap());
    }

    #[test]
    fn iet_is_a_bijection(num in -23i64..=23, den in 1i64..=12, k in 0i64..40) {
        let u = GoldenNum::from_rational(BigRational::new(num.into(), (den * 10).into()));
        prop_assume!(iet_build(&u).is_ok());
        let spec = iet_build(&u).unwrap();
        prop_assert!(spec.images_tile_domain());
        let x = GoldenNum::phi().scale(&BigRational::new((2 * k + 1).into(), 80.into()));
        let (_, y) = spec.apply(&x).unwrap();
        prop_assert_eq!(spec.apply_inverse(&y).unwrap().1, x);
    }
}
