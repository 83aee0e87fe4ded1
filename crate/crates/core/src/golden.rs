//! Exact arithmetic in the golden field ℚ[φ] and in its extension ℚ[φ][s],
//! where `s = sin 36°` satisfies `s² = (3 − φ)/4`.
//!
//! Every predicate here is decided with integer arithmetic. Floating point only
//! appears in [`GoldenNum::to_decimal`] / [`PentaNum::to_decimal`] and the `to_f64`
//! helpers, which exist for printing.
//!
//! Directions on the boundary circle are [`ProjectivePoint`]s and the two
//! generators of the symmetry group act on them as [`MoebiusMap`]s ([`t`] and [`r`]).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from exact field arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("cannot parse number `{0}`")]
    Parse(String),
}

/// Three-valued sign of an exact real number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(x: &BigRational) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match self.to_i8() * rhs.to_i8() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// An element `a + bφ` of ℚ[φ] with φ = (1 + √5)/2.
///
/// The coefficients are reduced rationals, so structural equality is value
/// equality and the type can be hashed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenNum {
    a: BigRational,
    b: BigRational,
}

impl GoldenNum {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        GoldenNum { a, b }
    }

    /// `a + bφ` with integer coefficients.
    pub fn from_ints(a: i64, b: i64) -> Self {
        GoldenNum::new(rat_int(a), rat_int(b))
    }

    /// `an/ad + (bn/bd)φ`. Panics if a denominator is zero.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        GoldenNum::new(rat(an, ad), rat(bn, bd))
    }

    pub fn from_rational(a: BigRational) -> Self {
        GoldenNum::new(a, BigRational::zero())
    }

    pub fn from_integer(n: i64) -> Self {
        GoldenNum::from_ints(n, 0)
    }

    pub fn zero() -> Self {
        GoldenNum::from_ints(0, 0)
    }

    pub fn one() -> Self {
        GoldenNum::from_ints(1, 0)
    }

    pub fn phi() -> Self {
        GoldenNum::from_ints(0, 1)
    }

    /// Rational part `a`.
    pub fn a(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient `b` of φ.
    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when both coefficients are integers, i.e. the element lies in ℤ[φ].
    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    /// Galois conjugate, sending φ to 1 − φ.
    pub fn conjugate(&self) -> Self {
        GoldenNum::new(&self.a + &self.b, -&self.b)
    }

    /// Field norm `x·x̄ = a² + ab − b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Exact sign of the real number `a + bφ`.
    ///
    /// Writing the value as `(p + q√5)/2` with `p = 2a + b`, `q = b`, the sign
    /// follows from the signs of `p`, `q` and from comparing `p²` with `5q²`.
    pub fn sign(&self) -> Sign {
        let two = rat_int(2);
        let p = &two * &self.a + &self.b;
        let q = self.b.clone();
        let sp = Sign::of_rational(&p);
        let sq = Sign::of_rational(&q);
        match (sp, sq) {
            (s, Sign::Zero) => s,
            (Sign::Zero, s) => s,
            (s, t) if s == t => s,
            _ => {
                let lhs = &p * &p;
                let rhs = rat_int(5) * &q * &q;
                if lhs > rhs {
                    sp
                } else {
                    sq
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Sign::Negative {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inverse(&self) -> Result<Self, ArithmeticError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        let c = self.conjugate();
        Ok(GoldenNum::new(c.a / &n, c.b / &n))
    }

    pub fn checked_div(&self, rhs: &GoldenNum) -> Result<Self, ArithmeticError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        GoldenNum::new(&self.a * k, &self.b * k)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GoldenNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer coefficients when the element lies in ℤ[φ].
    pub fn integer_coefficients(&self) -> Option<(BigInt, BigInt)> {
        if self.is_integral() {
            Some((self.a.to_integer(), self.b.to_integer()))
        } else {
            None
        }
    }

    fn approx_f64(&self) -> f64 {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        self.a.to_f64().unwrap_or(0.0) + self.b.to_f64().unwrap_or(0.0) * phi
    }

    /// Decimal expansion rounded to `precision` digits after the point.
    pub fn to_decimal(&self, precision: usize) -> String {
        decimal_string(|r| (self - &GoldenNum::from_rational(r.clone())).sign(), self.approx_f64(), precision)
    }

    /// Nearest `f64`, for rendering only.
    pub fn to_f64(&self) -> f64 {
        self.to_decimal(20).parse().unwrap_or(f64::NAN)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let bmag = self.b.abs();
        let bstr = if bmag.is_one() {
            "φ".to_string()
        } else if bmag.is_integer() {
            format!("{}φ", bmag.numer())
        } else if bmag.numer().is_one() {
            format!("φ/{}", bmag.denom())
        } else {
            format!("{}φ/{}", bmag.numer(), bmag.denom())
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{bstr}")
            } else {
                write!(f, "{bstr}")
            }
        } else {
            let op = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{} {op} {bstr}", fmt_rational(&self.a))
        }
    }
}

impl fmt::Debug for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenNum({self})")
    }
}

/// Parses `A` or `A,B` (meaning `A + Bφ`) where `A`, `B` are integers or
/// fractions such as `-3/2`.
impl FromStr for GoldenNum {
    type Err = ArithmeticError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| -> Result<BigRational, ArithmeticError> {
            let t = t.trim();
            let r: BigRational = t.parse().map_err(|_| ArithmeticError::Parse(s.to_string()))?;
            Ok(r)
        };
        let parts: Vec<&str> = s.split(',').collect();
        match parts.as_slice() {
            [a] => Ok(GoldenNum::new(parse(a)?, BigRational::zero())),
            [a, b] => Ok(GoldenNum::new(parse(a)?, parse(b)?)),
            _ => Err(ArithmeticError::Parse(s.to_string())),
        }
    }
}

impl PartialOrd for GoldenNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().to_ordering()
    }
}

impl<'a> Add<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn add(self, rhs: &GoldenNum) -> GoldenNum {
        GoldenNum::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn sub(self, rhs: &GoldenNum) -> GoldenNum {
        GoldenNum::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn mul(self, rhs: &GoldenNum) -> GoldenNum {
        // (a + bφ)(c + dφ) = ac + bd + (ad + bc + bd)φ, using φ² = φ + 1.
        let bd = &self.b * &rhs.b;
        GoldenNum::new(&self.a * &rhs.a + &bd, &self.a * &rhs.b + &self.b * &rhs.a + bd)
    }
}

impl Neg for &GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum::new(-&self.a, -&self.b)
    }
}

impl Neg for GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum::new(-self.a, -self.b)
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t { (&self).$m(rhs) }
        }
        impl<'a> $tr<$t> for &'a $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(GoldenNum, Add add, Sub sub, Mul mul);

impl Zero for GoldenNum {
    fn zero() -> Self {
        GoldenNum::zero()
    }
    fn is_zero(&self) -> bool {
        GoldenNum::is_zero(self)
    }
}

impl One for GoldenNum {
    fn one() -> Self {
        GoldenNum::one()
    }
}

impl From<i64> for GoldenNum {
    fn from(n: i64) -> Self {
        GoldenNum::from_integer(n)
    }
}

fn rational_to_string(r: &BigRational) -> String {
    fmt_rational(r)
}

fn rational_from_string<E: serde::de::Error>(s: &str) -> Result<BigRational, E> {
    s.parse::<BigRational>().map_err(|_| E::custom(format!("invalid rational `{s}`")))
}

impl Serialize for GoldenNum {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        [rational_to_string(&self.a), rational_to_string(&self.b)].serialize(ser)
    }
}

impl<'de> Deserialize<'de> for GoldenNum {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let [a, b] = <[String; 2]>::deserialize(de)?;
        Ok(GoldenNum::new(rational_from_string(&a)?, rational_from_string(&b)?))
    }
}

/// `s² = (3 − φ)/4`.
pub fn s_squared() -> GoldenNum {
    GoldenNum::from_ratios(3, 4, -1, 4)
}

/// An element `p + q·s` of ℚ[φ][s], where `s = sin 36°`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PentaNum {
    p: GoldenNum,
    q: GoldenNum,
}

impl PentaNum {
    pub fn new(p: GoldenNum, q: GoldenNum) -> Self {
        PentaNum { p, q }
    }

    pub fn from_golden(p: GoldenNum) -> Self {
        PentaNum::new(p, GoldenNum::zero())
    }

    pub fn zero() -> Self {
        PentaNum::from_golden(GoldenNum::zero())
    }

    pub fn one() -> Self {
        PentaNum::from_golden(GoldenNum::one())
    }

    /// `s = sin 36°`.
    pub fn s() -> Self {
        PentaNum::new(GoldenNum::zero(), GoldenNum::one())
    }

    pub fn p(&self) -> &GoldenNum {
        &self.p
    }

    pub fn q(&self) -> &GoldenNum {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// The element itself when it lies in ℚ[φ].
    pub fn as_golden(&self) -> Option<&GoldenNum> {
        if self.q.is_zero() {
            Some(&self.p)
        } else {
            None
        }
    }

    /// Conjugate over ℚ[φ], sending s to −s.
    pub fn s_conjugate(&self) -> Self {
        PentaNum::new(self.p.clone(), -&self.q)
    }

    /// Exact sign of `p + q·s` using `s > 0`.
    pub fn sign(&self) -> Sign {
        let sp = self.p.sign();
        let sq = self.q.sign();
        match (sp, sq) {
            (s, Sign::Zero) => s,
            (Sign::Zero, s) => s,
            (s, t) if s == t => s,
            _ => {
                let lhs = &self.p * &self.p;
                let rhs = &(&self.q * &self.q) * &s_squared();
                if lhs > rhs {
                    sp
                } else {
                    sq
                }
            }
        }
    }

    pub fn inverse(&self) -> Result<Self, ArithmeticError> {
        // (p + qs)(p − qs) = p² − q²s² lies in ℚ[φ] and vanishes only at zero.
        let den = &(&self.p * &self.p) - &(&(&self.q * &self.q) * &s_squared());
        let inv = den.inverse()?;
        Ok(PentaNum::new(&self.p * &inv, -&(&self.q * &inv)))
    }

    pub fn checked_div(&self, rhs: &PentaNum) -> Result<Self, ArithmeticError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale(&self, k: &GoldenNum) -> Self {
        PentaNum::new(&self.p * k, &self.q * k)
    }

    fn approx_f64(&self) -> f64 {
        let s = (std::f64::consts::PI / 5.0).sin();
        self.p.approx_f64() + self.q.approx_f64() * s
    }

    /// Decimal expansion rounded to `precision` digits after the point.
    pub fn to_decimal(&self, precision: usize) -> String {
        decimal_string(
            |r| (self - &PentaNum::from_golden(GoldenNum::from_rational(r.clone()))).sign(),
            self.approx_f64(),
            precision,
        )
    }

    pub fn to_f64(&self) -> f64 {
        self.to_decimal(20).parse().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for PentaNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            write!(f, "{}", self.p)
        } else if self.p.is_zero() {
            write!(f, "({})s", self.q)
        } else {
            write!(f, "{} + ({})s", self.p, self.q)
        }
    }
}

impl fmt::Debug for PentaNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PentaNum({self})")
    }
}

impl PartialOrd for PentaNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PentaNum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().to_ordering()
    }
}

impl<'a> Add<&'a PentaNum> for &'a PentaNum {
    type Output = PentaNum;
    fn add(self, rhs: &PentaNum) -> PentaNum {
        PentaNum::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl<'a> Sub<&'a PentaNum> for &'a PentaNum {
    type Output = PentaNum;
    fn sub(self, rhs: &PentaNum) -> PentaNum {
        PentaNum::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl<'a> Mul<&'a PentaNum> for &'a PentaNum {
    type Output = PentaNum;
    fn mul(self, rhs: &PentaNum) -> PentaNum {
        let qq = &(&self.q * &rhs.q) * &s_squared();
        PentaNum::new(&(&self.p * &rhs.p) + &qq, &(&self.p * &rhs.q) + &(&self.q * &rhs.p))
    }
}

impl Neg for &PentaNum {
    type Output = PentaNum;
    fn neg(self) -> PentaNum {
        PentaNum::new(-&self.p, -&self.q)
    }
}

impl Neg for PentaNum {
    type Output = PentaNum;
    fn neg(self) -> PentaNum {
        PentaNum::new(-self.p, -self.q)
    }
}

forward_owned!(PentaNum, Add add, Sub sub, Mul mul);

impl From<GoldenNum> for PentaNum {
    fn from(p: GoldenNum) -> Self {
        PentaNum::from_golden(p)
    }
}

impl Serialize for PentaNum {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        [
            rational_to_string(&self.p.a),
            rational_to_string(&self.p.b),
            rational_to_string(&self.q.a),
            rational_to_string(&self.q.b),
        ]
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PentaNum {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let [a, b, c, d] = <[String; 4]>::deserialize(de)?;
        Ok(PentaNum::new(
            GoldenNum::new(rational_from_string(&a)?, rational_from_string(&b)?),
            GoldenNum::new(rational_from_string(&c)?, rational_from_string(&d)?),
        ))
    }
}

/// Rounds `x·10^precision` to the nearest integer using only exact comparisons
/// of `x` against rationals, then formats the result.
fn decimal_string(cmp_with: impl Fn(&BigRational) -> Sign, approx: f64, precision: usize) -> String {
    let scale = BigInt::from(10u32).pow(precision as u32);
    let half = rat(1, 2);
    // k <= x·10^p + 1/2  <=>  x >= (k − 1/2)/10^p
    let le = |k: &BigInt| -> bool {
        let r = (BigRational::from_integer(k.clone()) - &half) / BigRational::from_integer(scale.clone());
        cmp_with(&r) != Sign::Negative
    };
    let guess = {
        let g = approx * 10f64.powi(precision.min(300) as i32) + 0.5;
        if g.is_finite() && precision <= 300 {
            BigRational::from_float(g.floor()).map(|r| r.to_integer()).unwrap_or_default()
        } else {
            BigInt::zero()
        }
    };
    let mut step = BigInt::one();
    let mut lo = guess.clone();
    while !le(&lo) {
        lo -= &step;
        step *= 2;
    }
    let mut step = BigInt::one();
    let mut hi = &guess + 1;
    while le(&hi) {
        hi += &step;
        step *= 2;
    }
    // Invariant: le(lo), !le(hi).
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        if le(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let negative = lo.is_negative();
    let mag = lo.abs();
    let (int_part, frac) = mag.div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if precision == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac.to_string(), width = precision)
    }
}

/// A point of the real projective line: a finite coordinate or ∞.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ProjectivePoint {
    Finite(GoldenNum),
    Infinity,
}

impl ProjectivePoint {
    pub fn finite(x: GoldenNum) -> Self {
        ProjectivePoint::Finite(x)
    }

    /// Builds `[x : y]`; `y = 0` gives ∞. Both zero is not a point.
    pub fn from_homogeneous(x: GoldenNum, y: GoldenNum) -> Option<Self> {
        if y.is_zero() {
            if x.is_zero() {
                None
            } else {
                Some(ProjectivePoint::Infinity)
            }
        } else {
            x.checked_div(&y).ok().map(ProjectivePoint::Finite)
        }
    }

    pub fn homogeneous(&self) -> (GoldenNum, GoldenNum) {
        match self {
            ProjectivePoint::Finite(x) => (x.clone(), GoldenNum::one()),
            ProjectivePoint::Infinity => (GoldenNum::one(), GoldenNum::zero()),
        }
    }

    pub fn as_finite(&self) -> Option<&GoldenNum> {
        match self {
            ProjectivePoint::Finite(x) => Some(x),
            ProjectivePoint::Infinity => None,
        }
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectivePoint::Finite(x) => write!(f, "{x}"),
            ProjectivePoint::Infinity => write!(f, "∞"),
        }
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            ProjectivePoint::Finite(x) => x.serialize(ser),
            ProjectivePoint::Infinity => ser.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Inf(String),
            Fin(GoldenNum),
        }
        match Repr::deserialize(de)? {
            Repr::Fin(x) => Ok(ProjectivePoint::Finite(x)),
            Repr::Inf(s) if s == "inf" => Ok(ProjectivePoint::Infinity),
            Repr::Inf(s) => Err(serde::de::Error::custom(format!("expected \"inf\", got `{s}`"))),
        }
    }
}

/// A fractional-linear map `x ↦ (m00·x + m01)/(m10·x + m11)`.
///
/// Two maps compare equal when their matrices are proportional.
#[derive(Clone, Debug)]
pub struct MoebiusMap {
    m: [[GoldenNum; 2]; 2],
}

impl MoebiusMap {
    pub fn new(m: [[GoldenNum; 2]; 2]) -> Result<Self, ArithmeticError> {
        let map = MoebiusMap { m };
        if map.det().is_zero() {
            Err(ArithmeticError::SingularMatrix)
        } else {
            Ok(map)
        }
    }

    pub fn identity() -> Self {
        MoebiusMap {
            m: [[GoldenNum::one(), GoldenNum::zero()], [GoldenNum::zero(), GoldenNum::one()]],
        }
    }

    pub fn entries(&self) -> &[[GoldenNum; 2]; 2] {
        &self.m
    }

    pub fn det(&self) -> GoldenNum {
        &(&self.m[0][0] * &self.m[1][1]) - &(&self.m[0][1] * &self.m[1][0])
    }

    /// Matrix product `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        let a = &self.m;
        let b = &other.m;
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        MoebiusMap { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    /// Projective inverse (the adjugate matrix).
    pub fn inverse(&self) -> MoebiusMap {
        let m = &self.m;
        MoebiusMap {
            m: [[m[1][1].clone(), -&m[0][1]], [-&m[1][0], m[0][0].clone()]],
        }
    }

    pub fn pow(&self, e: u32) -> MoebiusMap {
        (0..e).fold(MoebiusMap::identity(), |acc, _| acc.compose(self))
    }

    /// Acts on the homogeneous lift; ∞ is the column `(1, 0)`.
    pub fn apply(&self, x: &ProjectivePoint) -> ProjectivePoint {
        let (u, v) = x.homogeneous();
        let (nu, nv) = self.apply_homogeneous(&u, &v);
        ProjectivePoint::from_homogeneous(nu, nv).expect("invertible map sends points to points")
    }

    pub fn apply_homogeneous(&self, u: &GoldenNum, v: &GoldenNum) -> (GoldenNum, GoldenNum) {
        let m = &self.m;
        (&(&m[0][0] * u) + &(&m[0][1] * v), &(&m[1][0] * u) + &(&m[1][1] * v))
    }

    pub fn is_identity(&self) -> bool {
        *self == MoebiusMap::identity()
    }
}

impl PartialEq for MoebiusMap {
    fn eq(&self, other: &Self) -> bool {
        // Proportional matrices: every 2×2 cross product of entries agrees.
        let a: Vec<&GoldenNum> = self.m.iter().flatten().collect();
        let b: Vec<&GoldenNum> = other.m.iter().flatten().collect();
        (0..4).all(|i| (0..4).all(|j| a[i] * b[j] == a[j] * b[i]))
    }
}

impl Eq for MoebiusMap {}

static T_MAP: LazyLock<MoebiusMap> = LazyLock::new(|| {
    MoebiusMap::new([
        [GoldenNum::from_ints(0, 2), GoldenNum::from_ints(3, -1)],
        [GoldenNum::from_integer(-4), GoldenNum::from_ints(0, 2)],
    ])
    .expect("T is invertible")
});

static R_MAP: LazyLock<MoebiusMap> = LazyLock::new(|| {
    MoebiusMap::new([
        [GoldenNum::zero(), GoldenNum::one()],
        [&GoldenNum::from_integer(4) * &GoldenNum::phi().pow(4), GoldenNum::zero()],
    ])
    .expect("R is invertible")
});

/// The order-5 rotation `T(x) = (2φx + 3 − φ)/(2φ − 4x)`.
pub fn t() -> &'static MoebiusMap {
    &T_MAP
}

/// The involution `R(x) = 1/(4φ⁴x)`, fixing both ends of sector 3.
pub fn r() -> &'static MoebiusMap {
    &R_MAP
}
