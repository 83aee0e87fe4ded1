//! Roman period pairs `(a, A)` of periodic directions.
//!
//! A pair is encoded as the single element `a + Aφ` of ℤ[φ]. In that form the
//! three directions spawned by an arc with endpoint codes `U`, `V` get
//! `V + φU`, `φU + φV` and `U + φV`, and the code of an index is the first
//! component of `X_{n_k} ⋯ X_{n₁} (φ², φ²)ᵀ`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::directions::{neighbor_family, DirectionError, DirectionIndex};
use crate::golden::GoldenNum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PeriodError {
    #[error(transparent)]
    Direction(#[from] DirectionError),
    #[error("{0} is not a positive element of ℤ[φ]")]
    NotAPeriod(String),
    #[error("progression breaks at γ_{at}: expected difference {expected:?}, found {found:?}")]
    ProgressionBroken { at: i64, expected: (BigInt, BigInt), found: (BigInt, BigInt) },
}

/// Short and long Roman periods of one direction.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PeriodPair {
    pub short: BigUint,
    pub long: BigUint,
}

impl PeriodPair {
    pub fn new(short: u64, long: u64) -> Self {
        PeriodPair { short: BigUint::from(short), long: BigUint::from(long) }
    }

    /// Arabic periods, twice the Roman ones.
    pub fn arabic(&self) -> (BigUint, BigUint) {
        (&self.short * 2u32, &self.long * 2u32)
    }

    pub fn encode(&self) -> GoldenPeriod {
        GoldenPeriod(GoldenNum::new(
            BigRational::from_integer(BigInt::from(self.short.clone())),
            BigRational::from_integer(BigInt::from(self.long.clone())),
        ))
    }

    pub fn as_u64(&self) -> Option<(u64, u64)> {
        Some((self.short.to_u64()?, self.long.to_u64()?))
    }
}

impl fmt::Display for PeriodPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.short, self.long)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum BigRepr {
    Small(u64),
    Big(String),
}

fn big_repr(n: &BigUint) -> BigRepr {
    n.to_u64().map(BigRepr::Small).unwrap_or_else(|| BigRepr::Big(n.to_string()))
}

fn from_big_repr<E: serde::de::Error>(r: BigRepr) -> Result<BigUint, E> {
    match r {
        BigRepr::Small(n) => Ok(BigUint::from(n)),
        BigRepr::Big(s) => s.parse().map_err(|_| E::custom(format!("invalid integer `{s}`"))),
    }
}

/// Serialised as `[short, long]`; values beyond `u64` become decimal strings.
impl Serialize for PeriodPair {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        (big_repr(&self.short), big_repr(&self.long)).serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PeriodPair {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let (a, b) = <(BigRepr, BigRepr)>::deserialize(de)?;
        Ok(PeriodPair { short: from_big_repr(a)?, long: from_big_repr(b)? })
    }
}

/// A period pair in its ℤ[φ] form `a + Aφ`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GoldenPeriod(pub GoldenNum);

impl GoldenPeriod {
    pub fn decode(&self) -> Result<PeriodPair, PeriodError> {
        let bad = || PeriodError::NotAPeriod(self.0.to_string());
        let (a, b) = self.0.integer_coefficients().ok_or_else(bad)?;
        if !a.is_positive() || !b.is_positive() {
            return Err(bad());
        }
        Ok(PeriodPair { short: a.magnitude().clone(), long: b.magnitude().clone() })
    }
}

/// The matrices `X₀ … X₃` acting on pairs of codes.
pub fn x_matrix(n: u8) -> [[GoldenNum; 2]; 2] {
    let one = GoldenNum::one;
    let zero = GoldenNum::zero;
    let phi = GoldenNum::phi;
    match n {
        0 => [[one(), zero()], [phi(), one()]],
        1 => [[phi(), one()], [phi(), phi()]],
        2 => [[phi(), phi()], [one(), phi()]],
        3 => [[one(), phi()], [zero(), one()]],
        _ => panic!("X-matrix index {n} out of range"),
    }
}

fn mat_vec(m: &[[GoldenNum; 2]; 2], v: &(GoldenNum, GoldenNum)) -> (GoldenNum, GoldenNum) {
    (&(&m[0][0] * &v.0) + &(&m[0][1] * &v.1), &(&m[1][0] * &v.0) + &(&m[1][1] * &v.1))
}

/// The period pair of an index, from `X_{n_k} ⋯ X_{n₁} (φ², φ²)ᵀ`.
pub fn period_of_index(idx: &DirectionIndex) -> PeriodPair {
    if idx.is_bottom() {
        return PeriodPair::new(1, 1);
    }
    let phi2 = GoldenNum::from_ints(1, 1);
    let mut v = (phi2.clone(), phi2);
    for &n in idx.digits() {
        v = mat_vec(&x_matrix(n), &v);
    }
    GoldenPeriod(v.0).decode().expect("codes of indices are positive in ℤ[φ]")
}

/// The three pairs spawned between two endpoints joined by a pentagon side,
/// listed from `left` to `right`.
pub fn child_periods(left: &PeriodPair, right: &PeriodPair) -> [PeriodPair; 3] {
    let u = left.encode().0;
    let v = right.encode().0;
    let phi = GoldenNum::phi();
    let pu = &phi * &u;
    let pv = &phi * &v;
    let decode = |x: GoldenNum| GoldenPeriod(x).decode().expect("positive");
    [decode(&v + &pu), decode(&pu + &pv), decode(&u + &pv)]
}

/// Periods of every index up to generation `depth`, computed only from the
/// arc recursion starting at `(1, 1)` on both ends of the sector.
pub fn periods_by_recursion(depth: usize) -> BTreeMap<DirectionIndex, PeriodPair> {
    let mut out = BTreeMap::new();
    out.insert(DirectionIndex::alpha(), PeriodPair::new(1, 1));
    out.insert(DirectionIndex::bottom(), PeriodPair::new(1, 1));
    let mut arcs = vec![(DirectionIndex::alpha(), DirectionIndex::bottom())];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (p, q) in arcs {
            let kids = child_periods(&out[&p], &out[&q]);
            let (vp, vq) = (p.base4(), q.base4());
            let mut chain = vec![p.clone()];
            for (n, pair) in (1..=3).zip(kids) {
                let v = &vp + (&vq - &vp) * BigRational::new(BigInt::from(n), BigInt::from(4));
                let child = DirectionIndex::from_base4(&v).expect("terminating");
                out.insert(child.clone(), pair);
                chain.push(child);
            }
            chain.push(q);
            next.extend(chain.windows(2).map(|w| (w[0].clone(), w[1].clone())));
        }
        arcs = next;
    }
    out
}

/// One term of a neighbour-family progression.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyTerm {
    pub i: i64,
    pub index: DirectionIndex,
    pub periods: PeriodPair,
    /// `(c_i, C_i)`, negated when `i < 0`.
    pub signed: (String, String),
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub center: DirectionIndex,
    pub center_periods: PeriodPair,
    pub one_sided: bool,
    /// The common difference `(B, b + B)`.
    pub difference: (String, String),
    pub terms: Vec<FamilyTerm>,
    /// Smallest and largest `i` covered.
    pub verified_range: (i64, i64),
}

/// Checks that the periods around `beta` form an arithmetic progression with
/// difference `(B, b + B)`, where `(b, B)` are the periods of `beta`.
pub fn arithmetic_family_check(beta: &DirectionIndex, radius: usize, depth: usize) -> Result<FamilyReport, PeriodError> {
    let fam = neighbor_family(beta, radius, depth)?;
    let bp = period_of_index(beta);
    let b = BigInt::from(bp.short.clone());
    let bb = BigInt::from(bp.long.clone());
    let diff = (bb.clone(), &b + &bb);
    let mut terms: Vec<(FamilyTerm, (BigInt, BigInt))> = fam
        .members
        .iter()
        .map(|n| {
            let p = period_of_index(&n.index);
            let sgn = if n.i < 0 { BigInt::from(-1) } else { BigInt::from(1) };
            let c = &sgn * BigInt::from(p.short.clone());
            let cc = &sgn * BigInt::from(p.long.clone());
            let term = FamilyTerm { i: n.i, index: n.index.clone(), periods: p, signed: (c.to_string(), cc.to_string()) };
            (term, (c, cc))
        })
        .collect();
    terms.sort_by_key(|(t, _)| t.i);
    for w in terms.windows(2) {
        let found = (&w[1].1 .0 - &w[0].1 .0, &w[1].1 .1 - &w[0].1 .1);
        if found != diff {
            return Err(PeriodError::ProgressionBroken { at: w[1].0.i, expected: diff, found });
        }
    }
    let lo = terms.first().map_or(0, |t| t.0.i);
    let hi = terms.last().map_or(0, |t| t.0.i);
    Ok(FamilyReport {
        center: beta.clone(),
        center_periods: bp,
        one_sided: fam.is_one_sided(),
        difference: (diff.0.to_string(), diff.1.to_string()),
        terms: terms.into_iter().map(|(t, _)| t).collect(),
        verified_range: (lo, hi),
    })
}

/// The period table: rows `(index, periods)` for the given indices.
pub fn period_table(indices: &[DirectionIndex]) -> Vec<(DirectionIndex, PeriodPair)> {
    indices.iter().map(|i| (i.clone(), period_of_index(i))).collect()
}

/// Renders rows as a two-column text table in the `Direction | Periods` layout.
pub fn format_period_table(rows: &[(DirectionIndex, PeriodPair)]) -> String {
    let name = |i: &DirectionIndex| {
        if i.is_bottom() {
            "BOTTOM".to_string()
        } else if i.is_alpha() {
            "α".to_string()
        } else {
            let d: String = i.digits().iter().map(u8::to_string).collect();
            format!("α_{d}")
        }
    };
    let half = rows.len().div_ceil(2);
    let mut out = String::from("Direction  Periods   | Direction  Periods\n");
    for r in 0..half {
        let left = &rows[r];
        let mut line = format!("{:<10} {:<9}", name(&left.0), format!("{},{}", left.1.short, left.1.long));
        if let Some(right) = rows.get(r + half) {
            line.push_str(&format!(" | {:<10} {},{}", name(&right.0), right.1.short, right.1.long));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_periods() {
        assert_eq!(period_of_index(&DirectionIndex::of(&[1])), PeriodPair::new(2, 3));
        assert_eq!(period_of_index(&DirectionIndex::of(&[0, 1])), PeriodPair::new(3, 5));
        assert_eq!(period_of_index(&DirectionIndex::alpha()), PeriodPair::new(1, 1));
        assert_eq!(period_of_index(&DirectionIndex::bottom()), PeriodPair::new(1, 1));
    }

    #[test]
    fn children() {
        let one = PeriodPair::new(1, 1);
        assert_eq!(child_periods(&one, &one), [PeriodPair::new(2, 3), PeriodPair::new(2, 4), PeriodPair::new(2, 3)]);
        assert_eq!(
            child_periods(&one, &PeriodPair::new(2, 3)),
            [PeriodPair::new(3, 5), PeriodPair::new(4, 7), PeriodPair::new(4, 6)]
        );
        let p = PeriodPair::new(5, 9);
        let q = PeriodPair::new(2, 4);
        let mut rev = child_periods(&q, &p);
        rev.reverse();
        assert_eq!(child_periods(&p, &q), rev);
    }

    #[test]
    fn progression_examples() {
        let r = arithmetic_family_check(&DirectionIndex::of(&[1]), 2, 3).unwrap();
        assert_eq!(r.difference, ("3".to_string(), "5".to_string()));
        let r = arithmetic_family_check(&DirectionIndex::alpha(), 2, 4).unwrap();
        assert_eq!(r.difference, ("1".to_string(), "2".to_string()));
        let r = arithmetic_family_check(&DirectionIndex::of(&[2]), 0, 1).unwrap();
        assert_eq!(r.terms.len(), 1);
    }

    #[test]
    fn non_positive_code_is_rejected() {
        assert!(GoldenPeriod(GoldenNum::from_ints(0, 3)).decode().is_err());
        assert!(GoldenPeriod(GoldenNum::from_ratios(1, 2, 1, 1)).decode().is_err());
    }

    #[test]
    fn json_pair() {
        let p = PeriodPair::new(3932, 6334);
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, "[3932,6334]");
        assert_eq!(serde_json::from_str::<PeriodPair>(&j).unwrap(), p);
    }
}
