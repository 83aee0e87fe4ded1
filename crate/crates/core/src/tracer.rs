//! Exact geometric oracle: straight-line flow on the double pentagon, billiard
//! flow in one regular pentagon, and the four-interval exchange induced on a
//! diagonal.
//!
//! Coordinates live in ℚ[φ][s]. Pentagon A has vertices
//!
//! ```text
//! V0 = (0, 0)          V1 = (1, 0)          V2 = ((1+φ)/2, φs)
//! V3 = (1/2, (φ+1)s)   V4 = ((1−φ)/2, φs)
//! ```
//!
//! so side `i` runs from `V_i` to `V_{i+1}` at angle `72°·i`. Pentagon B is A
//! turned by 180° about `(1/2, 0)`, sharing side 0 with A. Side `i` of A is
//! glued to the parallel side `i` of B by the translation `W_{i+1} − V_i`.
//!
//! The direction with absolute coordinate `x` is the vector `(x, s)`; sector 3
//! (`|x| ≤ 1 − φ/2`) is the cone between the two diagonals of A at 72° and
//! 108°.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::directions::{alpha_coordinate, in_sector};
use crate::golden::{rat, GoldenNum, PentaNum, ProjectivePoint, Sign};
use crate::orbits::{Alphabet, CyclicWord, OrbitKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("trajectory hits a vertex after {crossings} crossings")]
    VertexHit { crossings: usize },
    #[error("start point is not strictly inside a pentagon")]
    OutsidePolygon,
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("IET parameter {0} is outside |u| ≤ 1 − φ/2")]
    ParameterOutOfRange(String),
    #[error("IET orbit meets a division point at step {step}")]
    Singular { step: usize },
    #[error("start point {0} is outside the IET domain [0, φ)")]
    OutsideDomain(String),
    #[error("no closed orbit found within the budget of {budget}")]
    BudgetExhausted { budget: usize },
    #[error("found {found} distinct orbits where two were expected")]
    StripCount { found: usize },
    #[error("direction {0} is not in sector 3")]
    NotInSector(String),
}

/// A point (or vector) of the plane with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, serde::Deserialize)]
pub struct PlanePoint {
    pub x: PentaNum,
    pub y: PentaNum,
}

impl PlanePoint {
    pub fn new(x: PentaNum, y: PentaNum) -> Self {
        PlanePoint { x, y }
    }

    /// `(a, b·s)` with `a, b ∈ ℚ[φ]`.
    pub fn golden_s(a: GoldenNum, b: GoldenNum) -> Self {
        PlanePoint::new(PentaNum::from_golden(a), PentaNum::new(GoldenNum::zero(), b))
    }

    pub fn origin() -> Self {
        PlanePoint::new(PentaNum::zero(), PentaNum::zero())
    }

    pub fn add(&self, o: &PlanePoint) -> PlanePoint {
        PlanePoint::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &PlanePoint) -> PlanePoint {
        PlanePoint::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn scale(&self, k: &PentaNum) -> PlanePoint {
        PlanePoint::new(k * &self.x, k * &self.y)
    }

    pub fn neg(&self) -> PlanePoint {
        PlanePoint::new(-&self.x, -&self.y)
    }

    pub fn dot(&self, o: &PlanePoint) -> PentaNum {
        &(&self.x * &o.x) + &(&self.y * &o.y)
    }

    pub fn cross(&self, o: &PlanePoint) -> PentaNum {
        &(&self.x * &o.y) - &(&self.y * &o.x)
    }

    pub fn norm_squared(&self) -> PentaNum {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

/// Which pentagon of the double pentagon a point lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sheet {
    A,
    B,
}

fn half(n: i64) -> BigRational {
    rat(n, 2)
}

/// Vertices of pentagon A in counterclockwise order.
pub fn pentagon_a() -> [PlanePoint; 5] {
    let g = |a: BigRational, b: BigRational| GoldenNum::new(a, b);
    let z = || BigRational::from_integer(0.into());
    [
        PlanePoint::golden_s(GoldenNum::zero(), GoldenNum::zero()),
        PlanePoint::golden_s(GoldenNum::one(), GoldenNum::zero()),
        PlanePoint::golden_s(g(half(1), half(1)), GoldenNum::phi()),
        PlanePoint::golden_s(g(half(1), z()), GoldenNum::from_ints(1, 1)),
        PlanePoint::golden_s(g(half(1), half(-1)), GoldenNum::phi()),
    ]
}

/// The diagonal `u = (1/2, φ²s)` at 72°, of length φ.
pub fn u_vec() -> PlanePoint {
    PlanePoint::golden_s(GoldenNum::from_ratios(1, 2, 0, 1), GoldenNum::from_ints(1, 1))
}

/// The diagonal `v = (−1/2, φ²s)` at 108°, of length φ.
pub fn v_vec() -> PlanePoint {
    PlanePoint::golden_s(GoldenNum::from_ratios(-1, 2, 0, 1), GoldenNum::from_ints(1, 1))
}

/// `p·u + q·v`.
pub fn direction_of_vector(p: &GoldenNum, q: &GoldenNum) -> Result<PlanePoint, TraceError> {
    if p.is_zero() && q.is_zero() {
        return Err(TraceError::ZeroDirection);
    }
    let (pp, qq) = (PentaNum::from_golden(p.clone()), PentaNum::from_golden(q.clone()));
    Ok(u_vec().scale(&pp).add(&v_vec().scale(&qq)))
}

/// The vector `(x, s)` of a direction coordinate (`(1, 0)` for ∞).
pub fn direction_of_coordinate(x: &ProjectivePoint) -> PlanePoint {
    match x {
        ProjectivePoint::Finite(v) => PlanePoint::new(PentaNum::from_golden(v.clone()), PentaNum::s()),
        ProjectivePoint::Infinity => PlanePoint::new(PentaNum::one(), PentaNum::zero()),
    }
}

/// The double pentagon with its side pairings and labels.
#[derive(Clone, Debug)]
pub struct SurfaceChart {
    pub a: [PlanePoint; 5],
    pub b: [PlanePoint; 5],
    /// Translation carrying side `i` of A onto side `i` of B.
    pub tau: [PlanePoint; 5],
    /// Label `1..=5` of side `i`.
    pub labels: [u8; 5],
}

/// Side labels `3, 1, 4, 2, 5` of sides `0..5` (label of side `i` is `3 − 2i mod 5`).
pub const SIDE_LABELS: [u8; 5] = [3, 1, 4, 2, 5];

impl Default for SurfaceChart {
    fn default() -> Self {
        SurfaceChart::with_labels(SIDE_LABELS)
    }
}

impl SurfaceChart {
    pub fn with_labels(labels: [u8; 5]) -> Self {
        let a = pentagon_a();
        let offset = PlanePoint::golden_s(GoldenNum::one(), GoldenNum::zero());
        let b: [PlanePoint; 5] = std::array::from_fn(|i| offset.sub(&a[i]));
        let tau = std::array::from_fn(|i| b[(i + 1) % 5].sub(&a[i]));
        SurfaceChart { a, b, tau, labels }
    }

    pub fn polygon(&self, sheet: Sheet) -> &[PlanePoint; 5] {
        match sheet {
            Sheet::A => &self.a,
            Sheet::B => &self.b,
        }
    }

    /// The sheet whose interior strictly contains `p`.
    pub fn locate(&self, p: &PlanePoint) -> Option<Sheet> {
        [Sheet::A, Sheet::B].into_iter().find(|&s| strictly_inside(self.polygon(s), p))
    }

    /// A point on the horizontal diagonal of A, `V4 + (t, 0)` for `0 < t < φ`.
    pub fn diagonal_point(&self, t: &GoldenNum) -> PlanePoint {
        self.a[4].add(&PlanePoint::golden_s(t.clone(), GoldenNum::zero()))
    }
}

fn strictly_inside(poly: &[PlanePoint; 5], p: &PlanePoint) -> bool {
    (0..5).all(|i| {
        let e = poly[(i + 1) % 5].sub(&poly[i]);
        e.cross(&p.sub(&poly[i])).sign() == Sign::Positive
    })
}

/// Where a ray leaves a convex polygon.
struct Exit {
    side: usize,
    point: PlanePoint,
    t: PentaNum,
}

fn exit_of(poly: &[PlanePoint; 5], p: &PlanePoint, d: &PlanePoint, crossings: usize) -> Result<Exit, TraceError> {
    let mut best: Option<(PentaNum, usize, PentaNum)> = None;
    for j in 0..5 {
        let a = &poly[j];
        let e = poly[(j + 1) % 5].sub(a);
        let den = d.cross(&e);
        if den.sign() == Sign::Zero {
            continue;
        }
        // p + t·d = a + σ·e
        let ap = a.sub(p);
        let inv = den.inverse().expect("nonzero");
        let t = &ap.cross(&e) * &inv;
        if t.sign() != Sign::Positive {
            continue;
        }
        let sigma = &ap.cross(d) * &inv;
        if sigma.sign() == Sign::Negative || (&sigma - &PentaNum::one()).sign() == Sign::Positive {
            continue;
        }
        if best.as_ref().is_none_or(|(bt, _, _)| t < *bt) {
            best = Some((t, j, sigma));
        }
    }
    let (t, side, sigma) = best.ok_or(TraceError::OutsidePolygon)?;
    if sigma.is_zero() || sigma == PentaNum::one() {
        return Err(TraceError::VertexHit { crossings });
    }
    let point = p.add(&d.scale(&t));
    Ok(Exit { side, point, t })
}

/// A segment of a traced path inside one pentagon.
#[derive(Clone, Debug)]
pub struct Segment {
    pub sheet: Sheet,
    pub from: PlanePoint,
    pub to: PlanePoint,
}

/// Outcome of a trace.
#[derive(Clone, Debug, Serialize)]
pub struct TraceResult {
    /// Labels of the sides crossed (surface) or hit (billiard), in order.
    pub word: Vec<u8>,
    /// Side indices `0..5` behind the labels.
    pub sides: Vec<u8>,
    pub closed: bool,
    /// End point minus start point of the unfolded trajectory.
    pub displacement: PlanePoint,
    /// Total flow time; the trajectory length is `travel · |dir|`.
    pub travel: PentaNum,
    pub crossings: usize,
    #[serde(skip)]
    pub path: Vec<Segment>,
}

impl TraceResult {
    /// The crossing word as a cyclic Arabic word.
    pub fn cyclic_word(&self) -> Option<CyclicWord> {
        CyclicWord::new(Alphabet::Arabic, self.word.clone()).ok()
    }
}

/// Follows the straight line from `start` in direction `dir` across the glued
/// sides until it returns to `start` or `max_crossings` sides have been crossed.
pub fn trace_surface(
    chart: &SurfaceChart,
    start: &PlanePoint,
    dir: &PlanePoint,
    max_crossings: usize,
) -> Result<TraceResult, TraceError> {
    if dir.is_zero() {
        return Err(TraceError::ZeroDirection);
    }
    let start_sheet = chart.locate(start).ok_or(TraceError::OutsidePolygon)?;
    let mut sheet = start_sheet;
    let mut p = start.clone();
    let mut travel = PentaNum::zero();
    let mut sides = Vec::new();
    let mut path = Vec::new();
    loop {
        let ex = exit_of(chart.polygon(sheet), &p, dir, sides.len())?;
        if !sides.is_empty() && sheet == start_sheet {
            if let Some(tt) = time_to(&p, start, dir) {
                if tt < ex.t {
                    travel = &travel + &tt;
                    path.push(Segment { sheet, from: p, to: start.clone() });
                    return Ok(finish(chart, sides, true, travel, dir, path));
                }
            }
        }
        if sides.len() >= max_crossings {
            return Ok(finish(chart, sides, false, travel, dir, path));
        }
        travel = &travel + &ex.t;
        path.push(Segment { sheet, from: p.clone(), to: ex.point.clone() });
        sides.push(ex.side as u8);
        (sheet, p) = match sheet {
            Sheet::A => (Sheet::B, ex.point.add(&chart.tau[ex.side])),
            Sheet::B => (Sheet::A, ex.point.sub(&chart.tau[ex.side])),
        };
    }
}

/// Flow time `τ ≥ 0` with `from + τ·dir = to`, if `to` is ahead on the ray.
fn time_to(from: &PlanePoint, to: &PlanePoint, dir: &PlanePoint) -> Option<PentaNum> {
    let w = to.sub(from);
    if w.cross(dir).sign() != Sign::Zero {
        return None;
    }
    let tt = if !dir.x.is_zero() { w.x.checked_div(&dir.x).ok()? } else { w.y.checked_div(&dir.y).ok()? };
    (tt.sign() != Sign::Negative).then_some(tt)
}

fn finish(
    chart: &SurfaceChart,
    sides: Vec<u8>,
    closed: bool,
    travel: PentaNum,
    dir: &PlanePoint,
    path: Vec<Segment>,
) -> TraceResult {
    TraceResult {
        word: sides.iter().map(|&i| chart.labels[usize::from(i)]).collect(),
        crossings: sides.len(),
        sides,
        closed,
        displacement: dir.scale(&travel),
        travel,
        path,
    }
}

/// `2(d·e)/(e·e)·e − d`, the reflection of `d` in the line spanned by `e`.
pub fn reflect(d: &PlanePoint, e: &PlanePoint) -> PlanePoint {
    let k = &(&d.dot(e) * &PentaNum::from_golden(GoldenNum::from_integer(2))) * &e.norm_squared().inverse().expect("nonzero edge");
    e.scale(&k).sub(d)
}

/// Billiard flow in pentagon A; closes when point and direction both return.
pub fn trace_billiard(
    chart: &SurfaceChart,
    start: &PlanePoint,
    dir: &PlanePoint,
    max_reflections: usize,
) -> Result<TraceResult, TraceError> {
    if dir.is_zero() {
        return Err(TraceError::ZeroDirection);
    }
    if chart.locate(start) != Some(Sheet::A) {
        return Err(TraceError::OutsidePolygon);
    }
    let mut p = start.clone();
    let mut d = dir.clone();
    let mut travel = PentaNum::zero();
    let mut sides = Vec::new();
    let mut path = Vec::new();
    loop {
        let ex = exit_of(&chart.a, &p, &d, sides.len())?;
        if !sides.is_empty() && d == *dir {
            if let Some(tt) = time_to(&p, start, &d) {
                if tt < ex.t {
                    travel = &travel + &tt;
                    path.push(Segment { sheet: Sheet::A, from: p, to: start.clone() });
                    return Ok(finish(chart, sides, true, travel, dir, path));
                }
            }
        }
        if sides.len() >= max_reflections {
            return Ok(finish(chart, sides, false, travel, dir, path));
        }
        travel = &travel + &ex.t;
        path.push(Segment { sheet: Sheet::A, from: p, to: ex.point.clone() });
        sides.push(ex.side as u8);
        let e = chart.a[(ex.side + 1) % 5].sub(&chart.a[ex.side]);
        d = reflect(&d, &e);
        p = ex.point;
    }
}

/// Candidate start points on A's horizontal diagonal: midpoints of the
/// `n` equal pieces for a growing list of `n`.
pub fn diagonal_samples() -> impl Iterator<Item = GoldenNum> {
    [3i64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43].into_iter().flat_map(|n| {
        (0..n).map(move |i| GoldenNum::phi().scale(&rat(2 * i + 1, 2 * n)))
    })
}

/// The two cylinder orbits of a periodic direction.
#[derive(Clone, Debug, Serialize)]
pub struct StripOrbits {
    pub direction: PlanePoint,
    pub short: TraceResult,
    pub long: TraceResult,
    /// Diagonal parameters of the start points of the two orbits.
    pub starts: (GoldenNum, GoldenNum),
}

impl StripOrbits {
    pub fn get(&self, kind: OrbitKind) -> &TraceResult {
        match kind {
            OrbitKind::Short => &self.short,
            OrbitKind::Long => &self.long,
        }
    }

    pub fn start_point(&self, chart: &SurfaceChart, kind: OrbitKind) -> PlanePoint {
        chart.diagonal_point(match kind {
            OrbitKind::Short => &self.starts.0,
            OrbitKind::Long => &self.starts.1,
        })
    }
}

/// Traces from points of A's horizontal diagonal until both strips of the
/// direction `x` have been seen; vertex hits are skipped and retried from the
/// next rational sample point.
pub fn strip_orbits(chart: &SurfaceChart, x: &ProjectivePoint, max_crossings: usize) -> Result<StripOrbits, TraceError> {
    if !in_sector(x) {
        return Err(TraceError::NotInSector(x.to_string()));
    }
    let dir = direction_of_coordinate(x);
    let mut found: BTreeMap<Vec<u8>, (TraceResult, GoldenNum)> = BTreeMap::new();
    for t in diagonal_samples() {
        let start = chart.diagonal_point(&t);
        match trace_surface(chart, &start, &dir, max_crossings) {
            Ok(r) if r.closed => {
                let key = CyclicWord::arabic(&r.sides.iter().map(|s| s + 1).collect::<Vec<_>>()).canonical();
                found.entry(key).or_insert((r, t));
            }
            Ok(_) => return Err(TraceError::BudgetExhausted { budget: max_crossings }),
            Err(TraceError::VertexHit { .. }) => continue,
            Err(e) => return Err(e),
        }
        if found.len() >= 2 {
            break;
        }
    }
    if found.len() != 2 {
        return Err(TraceError::StripCount { found: found.len() });
    }
    let mut v: Vec<(TraceResult, GoldenNum)> = found.into_values().collect();
    v.sort_by(|a, b| a.0.travel.cmp(&b.0.travel));
    let (long, lt) = v.pop().unwrap();
    let (short, st) = v.pop().unwrap();
    Ok(StripOrbits { direction: dir, short, long, starts: (st, lt) })
}

/// Letters of the interval exchange, `I..IV` as `1..=4`.
pub const IET_IMAGE_ORDER: [u8; 4] = [2, 4, 1, 3];

/// A four-interval exchange on `[0, φ)`.
///
/// The intervals `I, II, III, IV` sit left to right with division points
/// `p₁ = 1/2 − u(φ+1)`, `p₂ = φ/2 − u`, `p₃ = φ − 1/2 − u(φ+1)`; their images
/// sit left to right in the order `II, IV, I, III`.
#[derive(Clone, Debug, Serialize)]
pub struct IetSpec {
    pub u: GoldenNum,
    pub division_points: [GoldenNum; 3],
    pub lengths: [GoldenNum; 4],
    pub starts: [GoldenNum; 4],
    /// Left end of the image of each interval.
    pub image_starts: [GoldenNum; 4],
}

/// The exchange for the parameter `u`, with `|u| ≤ 1 − φ/2`.
pub fn iet_build(u: &GoldenNum) -> Result<IetSpec, TraceError> {
    if u.abs() > alpha_coordinate() {
        return Err(TraceError::ParameterOutOfRange(u.to_string()));
    }
    let phi = GoldenNum::phi();
    let one = GoldenNum::one();
    let h = GoldenNum::from_ratios(1, 2, 0, 1);
    let p1 = &h - &(u * &(&phi + &one));
    let p2 = &phi.scale(&rat(1, 2)) - u;
    let p3 = &(&phi - &h) - &(u * &(&phi + &one));
    let starts = [GoldenNum::zero(), p1.clone(), p2.clone(), p3.clone()];
    let lengths = [p1.clone(), &p2 - &p1, &p3 - &p2, &phi - &p3];
    let mut image_starts: [GoldenNum; 4] = std::array::from_fn(|_| GoldenNum::zero());
    let mut pos = GoldenNum::zero();
    for &label in &IET_IMAGE_ORDER {
        let k = usize::from(label) - 1;
        image_starts[k] = pos.clone();
        pos = &pos + &lengths[k];
    }
    Ok(IetSpec { u: u.clone(), division_points: [p1, p2, p3], lengths, starts, image_starts })
}

impl IetSpec {
    /// The interval containing `x` (as `1..=4`) and the image of `x`.
    pub fn apply(&self, x: &GoldenNum) -> Option<(u8, GoldenNum)> {
        if x.sign() == Sign::Negative || *x >= GoldenNum::phi() {
            return None;
        }
        let k = (0..4).rev().find(|&k| *x >= self.starts[k] && self.lengths[k].sign() == Sign::Positive)?;
        Some((k as u8 + 1, &(x - &self.starts[k]) + &self.image_starts[k]))
    }

    /// The preimage of `y` under [`IetSpec::apply`].
    pub fn apply_inverse(&self, y: &GoldenNum) -> Option<(u8, GoldenNum)> {
        if y.sign() == Sign::Negative || *y >= GoldenNum::phi() {
            return None;
        }
        let k = (0..4)
            .filter(|&k| self.lengths[k].sign() == Sign::Positive && *y >= self.image_starts[k])
            .max_by(|&a, &b| self.image_starts[a].cmp(&self.image_starts[b]))?;
        Some((k as u8 + 1, &(y - &self.image_starts[k]) + &self.starts[k]))
    }

    /// Whether the four image intervals tile `[0, φ)` without gaps or overlaps,
    /// and every length is preserved.
    pub fn images_tile_domain(&self) -> bool {
        let mut pieces: Vec<(GoldenNum, GoldenNum)> = (0..4)
            .filter(|&k| self.lengths[k].sign() == Sign::Positive)
            .map(|k| (self.image_starts[k].clone(), &self.image_starts[k] + &self.lengths[k]))
            .collect();
        if self.lengths.iter().any(|l| l.sign() == Sign::Negative) {
            return false;
        }
        pieces.sort();
        let mut pos = GoldenNum::zero();
        for (a, b) in pieces {
            if a != pos {
                return false;
            }
            pos = b;
        }
        pos == GoldenNum::phi()
    }
}

/// A Roman word read off an IET orbit.
#[derive(Clone, Debug, Serialize)]
pub struct IetOrbit {
    pub word: Vec<u8>,
    pub closed: bool,
}

impl IetOrbit {
    pub fn cyclic_word(&self) -> Option<CyclicWord> {
        CyclicWord::new(Alphabet::Roman, self.word.clone()).ok()
    }
}

pub fn iet_orbit(spec: &IetSpec, x0: &GoldenNum, max_steps: usize) -> Result<IetOrbit, TraceError> {
    let mut x = x0.clone();
    let mut word = Vec::new();
    for step in 0..max_steps {
        if spec.division_points.contains(&x) {
            return Err(TraceError::Singular { step });
        }
        let (label, y) = spec.apply(&x).ok_or_else(|| TraceError::OutsideDomain(x.to_string()))?;
        word.push(label);
        x = y;
        if x == *x0 {
            return Ok(IetOrbit { word, closed: true });
        }
    }
    Ok(IetOrbit { word, closed: false })
}

/// The IET parameter of the direction with coordinate `x`: `u = −x`.
pub fn iet_parameter_of(x: &GoldenNum) -> GoldenNum {
    -x
}

/// Distinct closed Roman words of an IET, from midpoint samples of `[0, φ)`.
pub fn iet_orbits(spec: &IetSpec, max_steps: usize) -> Vec<CyclicWord> {
    let mut out: Vec<CyclicWord> = Vec::new();
    for x in diagonal_samples() {
        if let Ok(o) = iet_orbit(spec, &x, max_steps) {
            if let (true, Some(w)) = (o.closed, o.cyclic_word()) {
                if !out.contains(&w) {
                    out.push(w);
                }
            }
        }
    }
    out
}
