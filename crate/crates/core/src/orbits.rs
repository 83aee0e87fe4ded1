//! Symbolic orbits as cyclic words.
//!
//! An orbit in a sector-3 direction crosses the sides of the double pentagon
//! in pairs, and each pair is one of four downward edges of the chain graph
//! `1 – 4 – 3 – 2 – 5`:
//!
//! | Roman | pair |
//! |-------|------|
//! | I     | 4 3  |
//! | II    | 4 1  |
//! | III   | 2 5  |
//! | IV    | 2 3  |
//!
//! New orbits are produced from old ones by rotating the alphabet and then
//! *enhancing*: walking along the chain graph from each symbol to the next and
//! writing down every vertex passed. *Reduction* (keeping the sandwiched
//! symbols, those whose two neighbours agree) undoes an enhancement.
//!
//! The base words and the index bookkeeping of the recursion are fixed by
//! [`Convention::FROZEN`], which was chosen by comparing all candidate
//! conventions against the flow tracer (see `calibration`).

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::directions::DirectionIndex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("a cyclic word needs at least one symbol")]
    Empty,
    #[error("symbol {symbol} is not in the {alphabet:?} alphabet")]
    BadSymbol { alphabet: Alphabet, symbol: u8 },
    #[error("operation needs an {expected:?} word")]
    WrongAlphabet { expected: Alphabet },
    #[error("rotation {0} is out of range 0..=4")]
    BadShift(u8),
    #[error("symbols {from} and {to} are equal, so no chain path joins them")]
    NotEnhanceable { from: u8, to: u8 },
    #[error("no symbol is sandwiched, so the word is not an enhanced orbit")]
    EmptyReduction,
    #[error("word of odd length {0} cannot be split into Roman pairs")]
    OddLength(usize),
    #[error("no rotation parses into Roman pairs; first failure at position {position}")]
    Unparseable { position: usize },
    #[error("cannot parse word `{0}`")]
    Parse(String),
    #[error("L-map index {0} is out of range 1..=4")]
    BadLIndex(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Alphabet {
    /// Side labels `1..=5`.
    Arabic,
    /// Interval labels `I..=IV`, stored as `1..=4`.
    Roman,
}

impl Alphabet {
    fn max(self) -> u8 {
        match self {
            Alphabet::Arabic => 5,
            Alphabet::Roman => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitKind {
    Short,
    Long,
}

const ROMAN_NAMES: [&str; 4] = ["I", "II", "III", "IV"];

pub fn roman_name(symbol: u8) -> &'static str {
    ROMAN_NAMES[usize::from(symbol) - 1]
}

/// Index of the lexicographically least rotation (Booth's algorithm).
pub fn least_rotation(s: &[u8]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let d: Vec<u8> = s.iter().chain(s.iter()).copied().collect();
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k: isize = 0;
    for j in 1..2 * n as isize {
        let sj = d[j as usize];
        let mut i = f[(j - k - 1) as usize];
        while i != -1 && sj != d[(k + i + 1) as usize] {
            if sj < d[(k + i + 1) as usize] {
                k = j - i - 1;
            }
            i = f[i as usize];
        }
        if sj != d[(k + i + 1) as usize] {
            if sj < d[k as usize] {
                k = j;
            }
            f[(j - k) as usize] = -1;
        } else {
            f[(j - k) as usize] = i + 1;
        }
    }
    k as usize % n
}

/// A nonempty word read up to rotation.
///
/// The stored linear representative is kept as produced; equality, ordering
/// and hashing go through the least rotation.
#[derive(Clone)]
pub struct CyclicWord {
    alphabet: Alphabet,
    symbols: Vec<u8>,
}

impl CyclicWord {
    pub fn new(alphabet: Alphabet, symbols: Vec<u8>) -> Result<Self, OrbitError> {
        if symbols.is_empty() {
            return Err(OrbitError::Empty);
        }
        if let Some(&symbol) = symbols.iter().find(|&&x| x == 0 || x > alphabet.max()) {
            return Err(OrbitError::BadSymbol { alphabet, symbol });
        }
        Ok(CyclicWord { alphabet, symbols })
    }

    /// Arabic word; panics on invalid symbols (for literals in tests and examples).
    pub fn arabic(symbols: &[u8]) -> Self {
        CyclicWord::new(Alphabet::Arabic, symbols.to_vec()).expect("valid Arabic word")
    }

    /// Roman word with `1 = I … 4 = IV`; panics on invalid symbols.
    pub fn roman(symbols: &[u8]) -> Self {
        CyclicWord::new(Alphabet::Roman, symbols.to_vec()).expect("valid Roman word")
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// The stored linear representative.
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The lexicographically least rotation.
    pub fn canonical(&self) -> Vec<u8> {
        let k = least_rotation(&self.symbols);
        self.rotation(k)
    }

    /// The linear word starting at offset `k` of the representative.
    pub fn rotation(&self, k: usize) -> Vec<u8> {
        let n = self.symbols.len();
        (0..n).map(|i| self.symbols[(k + i) % n]).collect()
    }

    /// All `n` linear rotations (with repeats for periodic words).
    pub fn rotations(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        (0..self.len()).map(move |k| self.rotation(k))
    }

    /// Whether the linear word `w` is a rotation of this word.
    pub fn has_rotation(&self, w: &[u8]) -> bool {
        w.len() == self.len() && least_rotation_of(w) == self.canonical()
    }

    /// Alphabet involution `x ↦ 6 − x` (Arabic) / `I ↔ IV, II ↔ III` (Roman),
    /// which is how the mirror direction `x ↦ −x` acts on orbits.
    pub fn mirror(&self) -> Self {
        let top = self.alphabet.max() + 1;
        CyclicWord { alphabet: self.alphabet, symbols: self.symbols.iter().map(|&x| top - x).collect() }
    }

    /// Whether some rotation parses into the four Roman pairs.
    pub fn is_valid_sector3(&self) -> bool {
        self.alphabet == Alphabet::Arabic && parse_pairs(&self.symbols).is_ok()
    }
}

fn least_rotation_of(w: &[u8]) -> Vec<u8> {
    let k = least_rotation(w);
    (0..w.len()).map(|i| w[(k + i) % w.len()]).collect()
}

impl PartialEq for CyclicWord {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.len() == other.len() && self.canonical() == other.canonical()
    }
}

impl Eq for CyclicWord {}

impl Hash for CyclicWord {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.alphabet.hash(state);
        self.canonical().hash(state);
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = match self.alphabet {
            Alphabet::Arabic => self.symbols.iter().map(u8::to_string).collect(),
            Alphabet::Roman => self.symbols.iter().map(|&x| roman_name(x).to_string()).collect(),
        };
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicWord[{self}]")
    }
}

/// Parses whitespace- or comma-separated symbols. Arabic words may also be
/// written without separators (`"2525"`).
impl FromStr for CyclicWord {
    type Err = OrbitError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
        if tokens.is_empty() {
            return Err(OrbitError::Empty);
        }
        let roman: Option<Vec<u8>> = tokens
            .iter()
            .map(|t| ROMAN_NAMES.iter().position(|r| r == t).map(|p| p as u8 + 1))
            .collect();
        if let Some(r) = roman {
            return CyclicWord::new(Alphabet::Roman, r);
        }
        let digits: Option<Vec<u8>> = tokens.iter().flat_map(|t| t.chars()).map(|c| c.to_digit(10).map(|d| d as u8)).collect();
        match digits {
            Some(d) => CyclicWord::new(Alphabet::Arabic, d),
            None => Err(OrbitError::Parse(s.to_string())),
        }
    }
}

/// Arabic words serialise as integer arrays, Roman words as arrays of numerals.
impl Serialize for CyclicWord {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self.alphabet {
            Alphabet::Arabic => self.symbols.serialize(ser),
            Alphabet::Roman => self.symbols.iter().map(|&x| roman_name(x)).collect::<Vec<_>>().serialize(ser),
        }
    }
}

impl<'de> Deserialize<'de> for CyclicWord {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Arabic(Vec<u8>),
            Roman(Vec<String>),
        }
        match Repr::deserialize(de)? {
            Repr::Arabic(v) => CyclicWord::new(Alphabet::Arabic, v).map_err(serde::de::Error::custom),
            Repr::Roman(v) => v.join(" ").parse().map_err(serde::de::Error::custom),
        }
    }
}

/// The chain graph `1 – 4 – 3 – 2 – 5`.
pub const CHAIN: [u8; 5] = [1, 4, 3, 2, 5];

/// Roman pairs in order I, II, III, IV.
pub const ROMAN_PAIRS: [(u8, u8); 4] = [(4, 3), (4, 1), (2, 5), (2, 3)];

fn chain_position(x: u8) -> usize {
    CHAIN.iter().position(|&c| c == x).expect("Arabic symbol")
}

fn require(w: &CyclicWord, a: Alphabet) -> Result<(), OrbitError> {
    if w.alphabet == a {
        Ok(())
    } else {
        Err(OrbitError::WrongAlphabet { expected: a })
    }
}

/// Adds `j` to every symbol modulo 5.
pub fn rotate_alphabet(w: &CyclicWord, j: u8) -> Result<CyclicWord, OrbitError> {
    require(w, Alphabet::Arabic)?;
    if j > 4 {
        return Err(OrbitError::BadShift(j));
    }
    Ok(CyclicWord { alphabet: Alphabet::Arabic, symbols: w.symbols.iter().map(|&x| (x - 1 + j) % 5 + 1).collect() })
}

/// Inserts, between each pair of cyclically consecutive symbols, the interior
/// vertices of the chain path joining them.
pub fn enhance(w: &CyclicWord) -> Result<CyclicWord, OrbitError> {
    require(w, Alphabet::Arabic)?;
    let n = w.len();
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let (a, b) = (w.symbols[i], w.symbols[(i + 1) % n]);
        if a == b {
            return Err(OrbitError::NotEnhanceable { from: a, to: b });
        }
        out.push(a);
        let (pa, pb) = (chain_position(a), chain_position(b));
        if pb > pa {
            out.extend(&CHAIN[pa + 1..pb]);
        } else {
            out.extend(CHAIN[pb + 1..pa].iter().rev());
        }
    }
    Ok(CyclicWord { alphabet: Alphabet::Arabic, symbols: out })
}

/// Positions whose cyclic neighbours coincide.
pub fn sandwiched_positions(w: &CyclicWord) -> Vec<usize> {
    let n = w.len();
    (0..n).filter(|&i| w.symbols[(i + n - 1) % n] == w.symbols[(i + 1) % n]).collect()
}

/// Keeps the sandwiched symbols in cyclic order.
pub fn reduce(w: &CyclicWord) -> Result<CyclicWord, OrbitError> {
    require(w, Alphabet::Arabic)?;
    let keep: Vec<u8> = sandwiched_positions(w).into_iter().map(|i| w.symbols[i]).collect();
    if keep.is_empty() {
        return Err(OrbitError::EmptyReduction);
    }
    Ok(CyclicWord { alphabet: Alphabet::Arabic, symbols: keep })
}

/// Splits a linear Arabic word into Roman pairs starting at offset 0 or 1.
fn parse_pairs(s: &[u8]) -> Result<Vec<u8>, OrbitError> {
    let n = s.len();
    if n % 2 == 1 {
        return Err(OrbitError::OddLength(n));
    }
    let mut worst = 0;
    for off in 0..2.min(n) {
        let mut out = Vec::with_capacity(n / 2);
        let mut failed = None;
        for i in (0..n).step_by(2) {
            let pair = (s[(off + i) % n], s[(off + i + 1) % n]);
            match ROMAN_PAIRS.iter().position(|&p| p == pair) {
                Some(r) => out.push(r as u8 + 1),
                None => {
                    failed = Some((off + i) % n);
                    break;
                }
            }
        }
        match failed {
            None => return Ok(out),
            Some(p) if off == 0 => worst = p,
            Some(_) => {}
        }
    }
    Err(OrbitError::Unparseable { position: worst })
}

/// Reads an Arabic sector-3 word as a Roman word.
pub fn roman_of_arabic(w: &CyclicWord) -> Result<CyclicWord, OrbitError> {
    require(w, Alphabet::Arabic)?;
    Ok(CyclicWord { alphabet: Alphabet::Roman, symbols: parse_pairs(&w.symbols)? })
}

/// Spells each Roman symbol as its pair of side labels.
pub fn arabic_of_roman(w: &CyclicWord) -> Result<CyclicWord, OrbitError> {
    require(w, Alphabet::Roman)?;
    let symbols = w
        .symbols
        .iter()
        .flat_map(|&r| {
            let (a, b) = ROMAN_PAIRS[usize::from(r) - 1];
            [a, b]
        })
        .collect();
    Ok(CyclicWord { alphabet: Alphabet::Arabic, symbols })
}

/// The bookkeeping of the orbit recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Convention {
    /// Base words (Arabic) of α: short, long.
    pub alpha_words: (&'static [u8], &'static [u8]),
    /// Base words (Arabic) of BOTTOM: short, long.
    pub bottom_words: (&'static [u8], &'static [u8]),
    /// Generation 1: the orbit of `(m)` is the α orbit rotated by `m + first_offset`.
    pub first_offset: u8,
    /// Deeper: the orbit of `(m₁, …)` is its predecessor rotated by `m₁ + deep_offset`.
    pub deep_offset: u8,
    /// Rotate by `+j` (`false`) or by `−j` (`true`).
    pub negate_shift: bool,
}

impl Convention {
    /// The convention that reproduces the flow tracer.
    pub const FROZEN: Convention = Convention {
        alpha_words: (&[2, 5], &[4, 3]),
        bottom_words: (&[4, 1], &[2, 3]),
        first_offset: 0,
        deep_offset: 1,
        negate_shift: false,
    };

    /// Every candidate: base words on either endpoint, both shift signs and
    /// both offsets for the two kinds of step (16 in total).
    pub fn candidates() -> Vec<Convention> {
        let pairs: [(&'static [u8], &'static [u8]); 2] = [(&[2, 5], &[4, 3]), (&[4, 1], &[2, 3])];
        let mut out = Vec::new();
        for swap in [false, true] {
            for negate_shift in [false, true] {
                for first_offset in [0, 1] {
                    for deep_offset in [0, 1] {
                        let (a, b) = if swap { (pairs[1], pairs[0]) } else { (pairs[0], pairs[1]) };
                        out.push(Convention { alpha_words: a, bottom_words: b, first_offset, deep_offset, negate_shift });
                    }
                }
            }
        }
        out
    }

    fn shift(&self, j: u8) -> u8 {
        let j = j % 5;
        if self.negate_shift {
            (5 - j) % 5
        } else {
            j
        }
    }

    /// The predecessor of an index of generation ≥ 1 and the alphabet
    /// rotation leading from it.
    pub fn predecessor(&self, idx: &DirectionIndex) -> Option<(DirectionIndex, u8)> {
        let d = idx.digits();
        if idx.is_bottom() || d.is_empty() {
            return None;
        }
        if d.len() == 1 {
            return Some((DirectionIndex::alpha(), self.shift(d[0] + self.first_offset)));
        }
        let k = d.len();
        let mut pred: Vec<u8> = d[1..k - 1].iter().map(|&m| 3 - m).collect();
        pred.push(4 - d[k - 1]);
        let pred = DirectionIndex::new(pred).expect("predecessor digits are valid");
        Some((pred, self.shift(d[0] + self.deep_offset)))
    }

    pub fn orbit(&self, idx: &DirectionIndex, kind: OrbitKind) -> CyclicWord {
        let pick = |(s, l): (&'static [u8], &'static [u8])| match kind {
            OrbitKind::Short => CyclicWord::arabic(s),
            OrbitKind::Long => CyclicWord::arabic(l),
        };
        if idx.is_alpha() {
            return pick(self.alpha_words);
        }
        if idx.is_bottom() {
            return pick(self.bottom_words);
        }
        let (pred, j) = self.predecessor(idx).expect("generation ≥ 1");
        let w = self.orbit(&pred, kind);
        enhance(&rotate_alphabet(&w, j).expect("Arabic")).expect("rotated orbits are enhanceable")
    }
}

/// The symbolic orbit (Arabic) of an index, with the frozen convention.
pub fn orbit_of_index(idx: &DirectionIndex, kind: OrbitKind) -> CyclicWord {
    Convention::FROZEN.orbit(idx, kind)
}

/// The predecessor of an index and the alphabet rotation that, applied after
/// [`reduce`], leads from the orbit of the index back to the predecessor's.
pub fn reduction_step(idx: &DirectionIndex) -> Option<(DirectionIndex, u8)> {
    Convention::FROZEN.predecessor(idx).map(|(pred, j)| (pred, (5 - j) % 5))
}

/// Counts `(c, d, e, f)` of `I, II, III, IV` per period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct OrbitVector {
    pub c: u64,
    pub d: u64,
    pub e: u64,
    pub f: u64,
}

impl OrbitVector {
    pub const fn new(c: u64, d: u64, e: u64, f: u64) -> Self {
        OrbitVector { c, d, e, f }
    }

    pub fn as_array(&self) -> [u64; 4] {
        [self.c, self.d, self.e, self.f]
    }

    pub fn from_array(a: [u64; 4]) -> Self {
        OrbitVector::new(a[0], a[1], a[2], a[3])
    }

    /// The Roman period `c + d + e + f`.
    pub fn period(&self) -> u64 {
        self.c + self.d + self.e + self.f
    }
}

impl Add for OrbitVector {
    type Output = OrbitVector;
    fn add(self, o: OrbitVector) -> OrbitVector {
        OrbitVector::new(self.c + o.c, self.d + o.d, self.e + o.e, self.f + o.f)
    }
}

impl fmt::Display for OrbitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.c, self.d, self.e, self.f)
    }
}

/// Symbol counts of a sector-3 word (Arabic words are parsed first).
pub fn vector_of(w: &CyclicWord) -> Result<OrbitVector, OrbitError> {
    let roman = match w.alphabet {
        Alphabet::Roman => w.clone(),
        Alphabet::Arabic => roman_of_arabic(w)?,
    };
    let mut v = [0u64; 4];
    for &x in roman.symbols() {
        v[usize::from(x) - 1] += 1;
    }
    Ok(OrbitVector::from_array(v))
}

/// The linear maps describing how orbit vectors change under rotation by `i`
/// followed by enhancement.
pub fn apply_l(i: u8, v: OrbitVector) -> Result<OrbitVector, OrbitError> {
    let OrbitVector { c, d, e, f } = v;
    Ok(match i {
        1 => OrbitVector::new(c + e + f, e, c + d, c),
        2 => OrbitVector::new(c + d + e + f, c + d, c + f, c + e + f),
        3 => OrbitVector::new(c + d + f, c + f, e + f, c + d + e + f),
        4 => OrbitVector::new(f, e + f, d, c + d + f),
        _ => return Err(OrbitError::BadLIndex(i)),
    })
}

/// The matrix `M` with `long = M · short`.
pub const M: [[u64; 4]; 4] = [[1, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 1]];

pub fn apply_m(v: OrbitVector) -> OrbitVector {
    let a = v.as_array();
    let row = |r: &[u64; 4]| r.iter().zip(a).map(|(x, y)| x * y).sum();
    OrbitVector::new(row(&M[0]), row(&M[1]), row(&M[2]), row(&M[3]))
}

/// Whether `long = M · short`, i.e. `C = c + e, D = f, E = c, F = d + f`.
pub fn check_m(short: OrbitVector, long: OrbitVector) -> bool {
    apply_m(short) == long
}

/// `M²` and `M + I`, for checking `M² = M + I`.
pub fn m_squared_and_m_plus_i() -> ([[u64; 4]; 4], [[u64; 4]; 4]) {
    let mut sq = [[0u64; 4]; 4];
    let mut pi = M;
    for i in 0..4 {
        for j in 0..4 {
            sq[i][j] = (0..4).map(|k| M[i][k] * M[k][j]).sum();
        }
        pi[i][i] += 1;
    }
    (sq, pi)
}

/// The three (short, long) vector pairs between `(a, A)` and `(b, B)`:
/// `(b + A, a + A + B)`, `(A + B, a + b + A + B)`, `(a + B, b + A + B)`.
pub fn quintuple_relation(
    a: OrbitVector,
    big_a: OrbitVector,
    b: OrbitVector,
    big_b: OrbitVector,
) -> [(OrbitVector, OrbitVector); 3] {
    [
        (b + big_a, a + big_a + big_b),
        (big_a + big_b, a + b + big_a + big_b),
        (a + big_b, b + big_a + big_b),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    #[test]
    fn least_rotation_matches_brute_force() {
        let cases: [&[u8]; 6] = [&[3, 1, 2], &[1, 1, 1], &[2, 1, 2, 1], &[4, 3, 2, 3, 4, 1, 4, 1], &[5], &[2, 2, 1, 2, 2, 1, 1]];
        for c in cases {
            let brute = (0..c.len()).map(|k| (0..c.len()).map(|i| c[(k + i) % c.len()]).collect::<Vec<_>>()).min().unwrap();
            assert_eq!(least_rotation_of(c), brute);
        }
    }

    #[test]
    fn cyclic_equality() {
        assert_eq!(w("4 3 2 3 4 1 4 1"), w("1 4 3 2 3 4 1 4"));
        assert_ne!(w("4 3 2 3 4 1 4 1"), w("4 3 2 3 4 1 1 4"));
        assert_ne!(w("1 2"), CyclicWord::roman(&[1, 2]));
    }

    #[test]
    fn rotation_rows() {
        let base = w("4 3 2 3 4 1 4 1");
        assert_eq!(rotate_alphabet(&base, 1).unwrap().symbols(), &[5, 4, 3, 4, 5, 2, 5, 2]);
        assert_eq!(rotate_alphabet(&base, 4).unwrap().symbols(), &[3, 2, 1, 2, 3, 5, 3, 5]);
        assert_eq!(rotate_alphabet(&base, 0).unwrap(), base);
        assert!(rotate_alphabet(&CyclicWord::roman(&[1]), 1).is_err());
    }

    #[test]
    fn enhancement_rows() {
        assert_eq!(enhance(&w("5 4 3 4 5 2 5 2")).unwrap().symbols(), &[5, 2, 3, 4, 3, 4, 3, 2, 5, 2, 5, 2]);
        assert_eq!(
            enhance(&w("1 5 4 5 1 3 1 3")).unwrap().symbols(),
            &[1, 4, 3, 2, 5, 2, 3, 4, 3, 2, 5, 2, 3, 4, 1, 4, 3, 4, 1, 4, 3, 4]
        );
        assert_eq!(enhance(&w("2 5")).unwrap(), w("2 5"));
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce(&w("5 2 3 4 3 2 3 4 3 2")).unwrap(), w("4 2 4 5"));
        assert_eq!(reduce(&w("4 3 4 3")).unwrap(), w("4 3 4 3"));
        assert_eq!(reduce(&w("1 2 3")), Err(OrbitError::EmptyReduction));
        let x = w("5 4 3 4 5 2 5 2");
        assert_eq!(reduce(&enhance(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn reduction_walks_back_to_the_predecessor() {
        for idx in DirectionIndex::all_to_generation(3) {
            let Some((pred, back)) = reduction_step(&idx) else { continue };
            for kind in [OrbitKind::Short, OrbitKind::Long] {
                let r = reduce(&orbit_of_index(&idx, kind)).unwrap();
                assert_eq!(rotate_alphabet(&r, back).unwrap(), orbit_of_index(&pred, kind), "{idx}");
            }
        }
    }

    #[test]
    fn roman_coding() {
        assert_eq!(roman_of_arabic(&w("4 3 2 3 4 1 4 1")).unwrap(), w("I IV II II"));
        assert_eq!(roman_of_arabic(&w("2 5")).unwrap(), w("III"));
        assert!(matches!(roman_of_arabic(&w("1 5 3 5")), Err(OrbitError::Unparseable { .. })));
        assert_eq!(roman_of_arabic(&w("4 3 2")), Err(OrbitError::OddLength(3)));
        let r = w("I IV II II");
        assert_eq!(roman_of_arabic(&arabic_of_roman(&r).unwrap()).unwrap(), r);
    }

    #[test]
    fn base_orbits() {
        assert_eq!(orbit_of_index(&DirectionIndex::alpha(), OrbitKind::Short), w("2 5"));
        assert_eq!(orbit_of_index(&DirectionIndex::alpha(), OrbitKind::Long), w("4 3"));
        // Rotating α's orbits by 4 lands on BOTTOM.
        for kind in [OrbitKind::Short, OrbitKind::Long] {
            let a = orbit_of_index(&DirectionIndex::alpha(), kind);
            let b = orbit_of_index(&DirectionIndex::bottom(), kind);
            assert_eq!(enhance(&rotate_alphabet(&a, 4).unwrap()).unwrap(), b);
        }
    }

    #[test]
    fn vectors() {
        assert_eq!(vector_of(&w("4 3 2 3 4 1 4 1")).unwrap(), OrbitVector::new(1, 2, 0, 1));
        assert_eq!(vector_of(&w("III")).unwrap(), OrbitVector::new(0, 0, 1, 0));
        assert_eq!(apply_l(1, OrbitVector::new(0, 0, 1, 0)).unwrap(), OrbitVector::new(1, 1, 0, 0));
        assert_eq!(apply_l(4, OrbitVector::new(0, 0, 1, 0)).unwrap(), OrbitVector::new(0, 1, 0, 0));
        assert!(apply_l(5, OrbitVector::default()).is_err());
        assert!(check_m(OrbitVector::new(0, 0, 1, 0), OrbitVector::new(1, 0, 0, 0)));
        assert!(check_m(OrbitVector::new(1, 1, 0, 0), OrbitVector::new(1, 0, 1, 1)));
        assert!(!check_m(OrbitVector::new(1, 0, 0, 0), OrbitVector::new(1, 0, 0, 0)));
        let (sq, pi) = m_squared_and_m_plus_i();
        assert_eq!(sq, pi);
    }

    #[test]
    fn quintuple() {
        let rows = quintuple_relation(
            OrbitVector::new(0, 0, 1, 0),
            OrbitVector::new(1, 0, 0, 0),
            OrbitVector::new(0, 1, 0, 0),
            OrbitVector::new(0, 0, 0, 1),
        );
        assert_eq!(rows[0], (OrbitVector::new(1, 1, 0, 0), OrbitVector::new(1, 0, 1, 1)));
        assert_eq!(rows[1], (OrbitVector::new(1, 0, 0, 1), OrbitVector::new(1, 1, 1, 1)));
        assert_eq!(rows[2], (OrbitVector::new(0, 0, 1, 1), OrbitVector::new(1, 1, 0, 1)));
        let z = OrbitVector::default();
        assert!(quintuple_relation(z, z, z, z).iter().all(|&(s, l)| s == z && l == z));
    }

    #[test]
    fn json_forms() {
        assert_eq!(serde_json::to_string(&w("2 5")).unwrap(), "[2,5]");
        assert_eq!(serde_json::to_string(&w("IV I")).unwrap(), r#"["IV","I"]"#);
        let back: CyclicWord = serde_json::from_str(r#"["IV","I"]"#).unwrap();
        assert_eq!(back, w("I IV"));
    }
}
