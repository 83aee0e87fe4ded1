//! The tree of periodic directions inside sector 3.
//!
//! Sector 3 is the arc of the boundary circle from `α = 1 − φ/2` down to
//! `φ/2 − 1`. Its periodic directions are the vertices of a tessellation by
//! ideal pentagons; a vertex of generation `k` is named by a digit string
//! `n₁…n_k` with `0 ≤ nᵢ ≤ 3` and `n_k ≠ 0`, and its coordinate is
//! `R T^{m₁} ⋯ R T^{m_k} α` with
//!
//! ```text
//! m_i = 4 − n_i   (i even)
//! m_i = n_i + 1   (i odd, i < k)
//! m_i = n_i       (i odd, i = k)
//! ```
//!
//! Coordinates decrease strictly with the base-4 fraction `0.n₁n₂…n_k`, so the
//! digit strings read as positions along the arc: `α` sits at 0 and the far
//! endpoint `φ/2 − 1` at 1. That endpoint is addressed by the reserved index
//! [`DirectionIndex::bottom`], stored as the single digit `4`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::golden::{r, t, GoldenNum, MoebiusMap, ProjectivePoint, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DirectionError {
    #[error("digit {digit} at position {position} is out of range 0..=3")]
    InvalidDigit { position: usize, digit: u8 },
    #[error("the last digit of an index must be nonzero")]
    TrailingZero,
    #[error("cannot parse index `{0}`")]
    Parse(String),
    #[error("coordinate {0} lies outside sector 3")]
    OutsideSector(String),
    #[error("no index within depth {max_depth}; digit prefix so far: {prefix:?}")]
    DepthExceeded { max_depth: usize, prefix: Vec<u8> },
    #[error("depth {given} is too small; depth {needed} is needed")]
    InsufficientDepth { needed: usize, given: usize },
}

/// Name of a vertex of the sector-3 tessellation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DirectionIndex {
    digits: Vec<u8>,
}

impl DirectionIndex {
    pub fn new(digits: Vec<u8>) -> Result<Self, DirectionError> {
        for (position, &digit) in digits.iter().enumerate() {
            if digit > 3 {
                return Err(DirectionError::InvalidDigit { position, digit });
            }
        }
        if digits.last() == Some(&0) {
            return Err(DirectionError::TrailingZero);
        }
        Ok(DirectionIndex { digits })
    }

    /// Shorthand for tests and examples; panics on an invalid digit string.
    pub fn of(digits: &[u8]) -> Self {
        DirectionIndex::new(digits.to_vec()).expect("valid index")
    }

    /// The empty index, `α = 1 − φ/2`.
    pub fn alpha() -> Self {
        DirectionIndex { digits: Vec::new() }
    }

    /// The far endpoint `φ/2 − 1` of sector 3.
    pub fn bottom() -> Self {
        DirectionIndex { digits: vec![4] }
    }

    pub fn is_alpha(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_bottom(&self) -> bool {
        self.digits == [4]
    }

    /// The digits `n₁…n_k` (`[4]` for BOTTOM).
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Generation `k`; both endpoints of the sector have generation 0.
    pub fn generation(&self) -> usize {
        if self.is_bottom() {
            0
        } else {
            self.digits.len()
        }
    }

    /// Position along the sector as the base-4 fraction `0.n₁n₂…n_k`.
    pub fn base4(&self) -> BigRational {
        let mut v = BigRational::zero();
        let mut w = BigRational::one();
        let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
        for &d in &self.digits {
            w = &w * &quarter;
            v += &w * BigRational::from_integer(BigInt::from(d));
        }
        v
    }

    /// Inverse of [`DirectionIndex::base4`] for terminating base-4 fractions in `[0, 1]`.
    pub fn from_base4(v: &BigRational) -> Option<Self> {
        if v.is_one() {
            return Some(DirectionIndex::bottom());
        }
        if *v < BigRational::zero() || *v > BigRational::one() {
            return None;
        }
        let four = BigRational::from_integer(BigInt::from(4));
        let mut digits = Vec::new();
        let mut x = v.clone();
        while !x.is_zero() {
            if digits.len() > 4096 {
                return None;
            }
            x = &x * &four;
            let d = x.to_integer();
            x -= BigRational::from_integer(d.clone());
            digits.push(u8::try_from(d).ok()?);
        }
        Some(DirectionIndex { digits })
    }

    /// The index of the mirror direction `x ↦ −x`, at base-4 position `1 − v`.
    pub fn mirror(&self) -> Self {
        DirectionIndex::from_base4(&(BigRational::one() - self.base4())).expect("terminating fraction")
    }

    /// Exponents `m₁…m_k` of the word `R T^{m₁} ⋯ R T^{m_k}`.
    pub fn exponents(&self) -> Vec<u32> {
        let k = self.digits.len();
        self.digits
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                let pos = i + 1;
                let n = u32::from(n);
                if pos % 2 == 0 {
                    4 - n
                } else if pos != k {
                    n + 1
                } else {
                    n
                }
            })
            .collect()
    }

    /// All sector-3 vertices of generation at most `g`, including BOTTOM,
    /// ordered from α to BOTTOM.
    pub fn all_to_generation(g: usize) -> Vec<DirectionIndex> {
        let mut out = vec![DirectionIndex::alpha()];
        let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..g {
            let mut next = Vec::new();
            for prefix in &layer {
                for d in 0..4u8 {
                    let mut v = prefix.clone();
                    v.push(d);
                    if d != 0 {
                        out.push(DirectionIndex { digits: v.clone() });
                    }
                    next.push(v);
                }
            }
            layer = next;
        }
        out.push(DirectionIndex::bottom());
        out.sort_by_key(|i| i.base4());
        out
    }
}

impl fmt::Display for DirectionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bottom() {
            return write!(f, "BOTTOM");
        }
        let parts: Vec<String> = self.digits.iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for DirectionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DirectionIndex{self}")
    }
}

impl PartialOrd for DirectionIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by position along the sector (α first, BOTTOM last).
impl Ord for DirectionIndex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.base4().cmp(&other.base4())
    }
}

/// Accepts `BOTTOM`, `()`, an empty string, `0 3`, `0,3`, `(0,3)` or `03`.
impl FromStr for DirectionIndex {
    type Err = DirectionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("bottom") {
            return Ok(DirectionIndex::bottom());
        }
        let t = t.trim_start_matches('(').trim_end_matches(')');
        let mut digits = Vec::new();
        for c in t.chars() {
            if c == ',' || c.is_whitespace() {
                continue;
            }
            let d = c.to_digit(10).ok_or_else(|| DirectionError::Parse(s.to_string()))?;
            digits.push(d as u8);
        }
        DirectionIndex::new(digits)
    }
}

impl Serialize for DirectionIndex {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        if self.is_bottom() {
            ser.serialize_str("BOTTOM")
        } else {
            self.digits.serialize(ser)
        }
    }
}

impl<'de> Deserialize<'de> for DirectionIndex {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Name(String),
            Digits(Vec<u8>),
        }
        match Repr::deserialize(de)? {
            Repr::Digits(d) => DirectionIndex::new(d).map_err(serde::de::Error::custom),
            Repr::Name(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// `α = 1 − φ/2`, the top of sector 3.
pub fn alpha_coordinate() -> GoldenNum {
    GoldenNum::from_ratios(1, 1, -1, 2)
}

/// `φ/2 − 1`, the bottom of sector 3.
pub fn bottom_coordinate() -> GoldenNum {
    GoldenNum::from_ratios(-1, 1, 1, 2)
}

/// Whether `x` lies in the closed arc `[φ/2 − 1, 1 − φ/2]`.
pub fn in_sector(x: &ProjectivePoint) -> bool {
    match x {
        ProjectivePoint::Finite(v) => *v >= bottom_coordinate() && *v <= alpha_coordinate(),
        ProjectivePoint::Infinity => false,
    }
}

/// The coordinate `R T^{m₁} ⋯ R T^{m_k} α` of an index.
pub fn coordinate_of_index(idx: &DirectionIndex) -> ProjectivePoint {
    let powers: Vec<MoebiusMap> = (0..=4).map(|m| t().pow(m)).collect();
    let (mut u, mut v) = (alpha_coordinate(), GoldenNum::one());
    for &m in idx.exponents().iter().rev() {
        let (a, b) = powers[m as usize].apply_homogeneous(&u, &v);
        let (a, b) = r().apply_homogeneous(&a, &b);
        // Renormalise to keep the entries small.
        let p = ProjectivePoint::from_homogeneous(a, b).expect("nonzero lift");
        (u, v) = p.homogeneous();
    }
    ProjectivePoint::from_homogeneous(u, v).expect("nonzero lift")
}

fn in_half_open_sector(x: &ProjectivePoint) -> bool {
    match x {
        ProjectivePoint::Finite(v) => *v > bottom_coordinate() && *v <= alpha_coordinate(),
        ProjectivePoint::Infinity => false,
    }
}

/// Recovers the index of a sector-3 coordinate by renormalisation: apply R,
/// find the T-power that brings the point back into the sector, repeat until
/// the point reaches α.
pub fn index_of_coordinate(x: &ProjectivePoint, max_depth: usize) -> Result<DirectionIndex, DirectionError> {
    if !in_sector(x) {
        return Err(DirectionError::OutsideSector(x.to_string()));
    }
    let alpha = ProjectivePoint::Finite(alpha_coordinate());
    if *x == alpha {
        return Ok(DirectionIndex::alpha());
    }
    if *x == ProjectivePoint::Finite(bottom_coordinate()) {
        return Ok(DirectionIndex::bottom());
    }
    let t_inv = t().inverse();
    let mut exps: Vec<u32> = Vec::new();
    let mut p = x.clone();
    loop {
        if exps.len() >= max_depth {
            return Err(DirectionError::DepthExceeded { max_depth, prefix: digits_of_prefix(&exps) });
        }
        let mut y = r().apply(&p);
        let mut found = None;
        for m in 1..=4u32 {
            y = t_inv.apply(&y);
            // The sub-sectors T^m(sector 3) meet only at endpoints; taking the
            // arc open at the bottom sends boundary hits to the shallower index.
            if in_half_open_sector(&y) {
                found = Some(m);
                break;
            }
        }
        let m = found.expect("R maps the open sector into the union of its four T-images");
        exps.push(m);
        p = y;
        if p == alpha {
            break;
        }
    }
    let k = exps.len();
    let digits = exps
        .iter()
        .enumerate()
        .map(|(i, &m)| {
            let pos = i + 1;
            (if pos % 2 == 0 {
                4 - m
            } else if pos != k {
                m - 1
            } else {
                m
            }) as u8
        })
        .collect();
    Ok(DirectionIndex { digits })
}

fn digits_of_prefix(exps: &[u32]) -> Vec<u8> {
    exps.iter()
        .enumerate()
        .map(|(i, &m)| (if (i + 1) % 2 == 0 { 4 - m } else { m - 1 }) as u8)
        .collect()
}

/// An ideal pentagon of the tessellation.
#[derive(Clone, Debug, Serialize)]
pub struct IdealPentagon {
    pub generation: usize,
    /// Vertices in order along the boundary circle. For generation ≥ 1 they run
    /// from the higher coordinate to the lower one.
    pub vertices: [ProjectivePoint; 5],
    /// Indices of the vertices that lie in sector 3.
    pub labels: [Option<DirectionIndex>; 5],
}

impl IdealPentagon {
    /// The generation-0 pentagon `1 − φ/2, φ/2, ∞, −φ/2, φ/2 − 1`.
    pub fn base() -> Self {
        let half_phi = GoldenNum::from_ratios(0, 1, 1, 2);
        IdealPentagon {
            generation: 0,
            vertices: [
                ProjectivePoint::Finite(alpha_coordinate()),
                ProjectivePoint::Finite(half_phi.clone()),
                ProjectivePoint::Infinity,
                ProjectivePoint::Finite(-half_phi),
                ProjectivePoint::Finite(bottom_coordinate()),
            ],
            labels: [Some(DirectionIndex::alpha()), None, None, None, Some(DirectionIndex::bottom())],
        }
    }

    /// Sector-3 arcs of this pentagon that carry the next generation, as
    /// pairs of vertex positions (higher coordinate first).
    fn child_arcs(&self) -> Vec<(usize, usize)> {
        if self.generation == 0 {
            vec![(0, 4)]
        } else {
            (0..4).map(|i| (i, i + 1)).collect()
        }
    }
}

/// Reflection in the geodesic with ideal endpoints `p`, `q`, as it acts on the
/// boundary circle: the involution fixing `p` and `q`.
pub fn geodesic_reflection(p: &GoldenNum, q: &GoldenNum) -> MoebiusMap {
    let s = p + q;
    let two = GoldenNum::from_integer(2);
    MoebiusMap::new([[s.clone(), -&(&two * &(p * q))], [two, -s]]).expect("distinct endpoints")
}

/// All pentagons of generation at most `d` in sector 3. Each child pentagon is
/// the mirror image of its parent in the shared side.
pub fn pentagons_to_depth(d: usize) -> Vec<IdealPentagon> {
    pentagons_where(d, |_, _| true)
}

/// Like [`pentagons_to_depth`], but only descends through arcs whose endpoint
/// labels satisfy `keep`.
fn pentagons_where(d: usize, keep: impl Fn(&BigRational, &BigRational) -> bool) -> Vec<IdealPentagon> {
    let mut out = vec![IdealPentagon::base()];
    let mut frontier = vec![0usize];
    for g in 1..=d {
        let mut next = Vec::new();
        for &pi in &frontier {
            let parent = out[pi].clone();
            for (i, j) in parent.child_arcs() {
                let li = parent.labels[i].as_ref().unwrap();
                let lj = parent.labels[j].as_ref().unwrap();
                let (vi, vj) = (li.base4(), lj.base4());
                if !keep(&vi, &vj) {
                    continue;
                }
                let (p, q) = (parent.vertices[i].as_finite().unwrap(), parent.vertices[j].as_finite().unwrap());
                let refl = geodesic_reflection(p, q);
                let mut fresh: Vec<GoldenNum> = (0..5)
                    .filter(|&k| k != i && k != j)
                    .map(|k| refl.apply(&parent.vertices[k]).as_finite().cloned().expect("finite image"))
                    .collect();
                fresh.sort_by(|a, b| b.cmp(a));
                let quarter = |n: i64| {
                    let v = &vi + (&vj - &vi) * BigRational::new(BigInt::from(n), BigInt::from(4));
                    DirectionIndex::from_base4(&v)
                };
                next.push(out.len());
                out.push(IdealPentagon {
                    generation: g,
                    vertices: [
                        parent.vertices[i].clone(),
                        ProjectivePoint::Finite(fresh[0].clone()),
                        ProjectivePoint::Finite(fresh[1].clone()),
                        ProjectivePoint::Finite(fresh[2].clone()),
                        parent.vertices[j].clone(),
                    ],
                    labels: [Some(li.clone()), quarter(1), quarter(2), quarter(3), Some(lj.clone())],
                });
            }
        }
        frontier = next;
    }
    out
}

/// One member `γ_i` of a neighbour family.
#[derive(Clone, Debug, Serialize)]
pub struct Neighbor {
    pub i: i64,
    pub index: DirectionIndex,
    pub point: ProjectivePoint,
}

/// The vertices joined to a centre `β` by pentagon sides.
///
/// For `β` of generation ≥ 1, `γ₀, γ₁, …` lie below `β` (toward BOTTOM),
/// farthest first, and `γ₋₁, γ₋₂, …` lie above it, farthest first. The two
/// ends of the sector only have neighbours on one side; there the family is
/// `γ₀ … γ_{2·radius}`, again farthest first.
#[derive(Clone, Debug, Serialize)]
pub struct NeighborFamily {
    pub center_index: DirectionIndex,
    pub center: ProjectivePoint,
    pub radius: usize,
    pub members: Vec<Neighbor>,
}

impl NeighborFamily {
    pub fn is_one_sided(&self) -> bool {
        self.center_index.generation() == 0
    }

    pub fn get(&self, i: i64) -> Option<&Neighbor> {
        self.members.iter().find(|n| n.i == i)
    }
}

/// Depth of tessellation needed to expose the family of `beta` at `radius`.
pub fn neighbor_depth_needed(beta: &DirectionIndex, radius: usize) -> usize {
    let g = beta.generation();
    if g == 0 {
        2 * radius
    } else {
        g + radius
    }
}

pub fn neighbor_family(beta: &DirectionIndex, radius: usize, depth: usize) -> Result<NeighborFamily, DirectionError> {
    let needed = neighbor_depth_needed(beta, radius);
    if depth < needed {
        return Err(DirectionError::InsufficientDepth { needed, given: depth });
    }
    let mut adjacent: BTreeMap<DirectionIndex, ProjectivePoint> = BTreeMap::new();
    let v = beta.base4();
    let around = |a: &BigRational, b: &BigRational| (a <= &v && &v <= b) || (b <= &v && &v <= a);
    for pent in pentagons_where(depth, around) {
        for k in 0..5 {
            if pent.labels[k].as_ref() != Some(beta) {
                continue;
            }
            for nb in [(k + 4) % 5, (k + 1) % 5] {
                if let Some(l) = &pent.labels[nb] {
                    adjacent.insert(l.clone(), pent.vertices[nb].clone());
                }
            }
        }
    }
    // Both lists farthest first.
    let below: Vec<_> = adjacent.iter().filter(|(i, _)| i.base4() > v).rev().collect();
    let above: Vec<_> = adjacent.iter().filter(|(i, _)| i.base4() < v).collect();
    let mk = |i: i64, (idx, pt): (&DirectionIndex, &ProjectivePoint)| Neighbor { i, index: idx.clone(), point: pt.clone() };
    let mut members = Vec::new();
    if beta.generation() == 0 {
        let side = if beta.is_alpha() { &below } else { &above };
        if side.len() < 2 * radius + 1 {
            return Err(DirectionError::InsufficientDepth { needed: needed + 1, given: depth });
        }
        for (i, &e) in side.iter().take(2 * radius + 1).enumerate() {
            members.push(mk(i as i64, e));
        }
    } else {
        if below.len() < radius + 1 || above.len() < radius {
            return Err(DirectionError::InsufficientDepth { needed: needed + 1, given: depth });
        }
        for (j, &e) in above.iter().take(radius).enumerate().rev() {
            members.push(mk(-(j as i64) - 1, e));
        }
        for (i, &e) in below.iter().take(radius + 1).enumerate() {
            members.push(mk(i as i64, e));
        }
    }
    Ok(NeighborFamily { center_index: beta.clone(), center: coordinate_of_index(beta), radius, members })
}

/// Sign helper used by callers that compare coordinates.
pub fn compare_coordinates(a: &ProjectivePoint, b: &ProjectivePoint) -> Option<Sign> {
    Some((a.as_finite()? - b.as_finite()?).sign())
}
