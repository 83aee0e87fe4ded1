//! Calibration of the symbolic recursion against the flow tracer.
//!
//! Each direction through a given generation is traced once, recording which
//! polygon side is crossed (`0..5`) rather than a label. Every affine labeling
//! `i ↦ a·i + b (mod 5)` of the sides and every recursion [`Convention`] is
//! then scored by the number of orbits on which the two disagree.
//!
//! Exactly two pairs agree everywhere, and they differ by the alphabet
//! involution `x ↦ 6 − x`, which also swaps which endpoint carries `2 5` and
//! reverses the shift. Requiring α's short orbit to be `2 5` (Roman III)
//! leaves the frozen pair.

use rayon::prelude::*;
use serde::Serialize;

use crate::directions::{coordinate_of_index, DirectionIndex};
use crate::orbits::{Convention, CyclicWord, OrbitKind};
use crate::tracer::{strip_orbits, SurfaceChart, TraceError, SIDE_LABELS};

/// Side-index words of the two strips of one direction.
#[derive(Clone, Debug, Serialize)]
pub struct SideTrace {
    pub index: DirectionIndex,
    pub short: Vec<u8>,
    pub long: Vec<u8>,
}

/// Traces every direction of generation at most `depth` (BOTTOM included).
pub fn trace_sides(depth: usize, max_crossings: usize) -> Result<Vec<SideTrace>, TraceError> {
    let chart = SurfaceChart::default();
    DirectionIndex::all_to_generation(depth)
        .into_par_iter()
        .map(|index| {
            let so = strip_orbits(&chart, &coordinate_of_index(&index), max_crossings)?;
            Ok(SideTrace { short: so.short.sides.clone(), long: so.long.sides.clone(), index })
        })
        .collect()
}

/// The 20 labelings `side i ↦ ((a·i + b) mod 5) + 1` with `a ≠ 0`.
pub fn affine_labelings() -> Vec<[u8; 5]> {
    let mut out = Vec::new();
    for a in 1..5u8 {
        for b in 0..5u8 {
            out.push(std::array::from_fn(|i| ((a * i as u8 + b) % 5) + 1));
        }
    }
    out
}

fn relabel(sides: &[u8], labels: &[u8; 5]) -> CyclicWord {
    CyclicWord::arabic(&sides.iter().map(|&s| labels[s as usize]).collect::<Vec<_>>())
}

/// Score of one (labeling, convention) pair.
#[derive(Clone, Debug, Serialize)]
pub struct Score {
    pub labels: [u8; 5],
    pub convention: Convention,
    /// Orbits (short and long counted separately) on which the recursion and
    /// the relabeled trace differ.
    pub mismatches: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Transcript {
    pub depth: usize,
    pub orbits_compared: usize,
    pub scores: Vec<Score>,
}

impl Transcript {
    /// Pairs with no mismatch.
    pub fn winners(&self) -> Vec<&Score> {
        self.scores.iter().filter(|s| s.mismatches == 0).collect()
    }

    /// Winners whose α short orbit is `2 5`.
    pub fn winners_with_alpha_iii(&self) -> Vec<&Score> {
        self.winners().into_iter().filter(|s| s.convention.alpha_words.0 == [2, 5]).collect()
    }

    /// Whether the winners are the frozen pair and its mirror image, so that
    /// the frozen pair is the only one with α short orbit `2 5`.
    pub fn frozen_is_unique_winner(&self) -> bool {
        let w = self.winners_with_alpha_iii();
        let mirrored = |s: &&Score| s.labels.iter().zip(SIDE_LABELS).all(|(&a, b)| a == 6 - b);
        w.len() == 1
            && w[0].labels == SIDE_LABELS
            && w[0].convention == Convention::FROZEN
            && self.winners().len() == 2
            && self.winners().iter().any(mirrored)
    }

    /// The best score for each labeling, one line each.
    pub fn summary(&self) -> String {
        let mut lines = vec![format!("{} orbits compared through generation {}", self.orbits_compared, self.depth)];
        for labels in affine_labelings() {
            let best = self.scores.iter().filter(|s| s.labels == labels).min_by_key(|s| s.mismatches).expect("scored");
            lines.push(format!(
                "labels {:?}: best {} mismatches (alpha {:?}/{:?}, offsets {}/{}, negated {})",
                labels,
                best.mismatches,
                best.convention.alpha_words.0,
                best.convention.alpha_words.1,
                best.convention.first_offset,
                best.convention.deep_offset,
                best.convention.negate_shift
            ));
        }
        lines.join("\n")
    }
}

/// Scores all labelings and conventions against pre-recorded traces.
pub fn score(traces: &[SideTrace], depth: usize) -> Transcript {
    let conventions = Convention::candidates();
    let scores: Vec<Score> = affine_labelings()
        .into_par_iter()
        .flat_map_iter(|labels| {
            let relabeled: Vec<(&SideTrace, CyclicWord, CyclicWord)> =
                traces.iter().map(|t| (t, relabel(&t.short, &labels), relabel(&t.long, &labels))).collect();
            conventions
                .iter()
                .map(|&convention| {
                    let mismatches = relabeled
                        .iter()
                        .map(|(t, s, l)| {
                            usize::from(convention.orbit(&t.index, OrbitKind::Short) != *s)
                                + usize::from(convention.orbit(&t.index, OrbitKind::Long) != *l)
                        })
                        .sum();
                    Score { labels, convention, mismatches }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    Transcript { depth, orbits_compared: 2 * traces.len(), scores }
}

/// Traces through `depth` and scores everything.
pub fn calibrate(depth: usize, max_crossings: usize) -> Result<Transcript, TraceError> {
    Ok(score(&trace_sides(depth, max_crossings)?, depth))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelings_are_distinct_bijections() {
        let all = affine_labelings();
        assert_eq!(all.len(), 20);
        for l in &all {
            let mut s = l.to_vec();
            s.sort();
            assert_eq!(s, vec![1, 2, 3, 4, 5]);
        }
        assert!(all.contains(&SIDE_LABELS));
    }

    #[test]
    fn frozen_pair_wins_alone_through_generation_two() {
        let t = calibrate(2, 4000).unwrap();
        assert!(t.frozen_is_unique_winner(), "{}", t.summary());
    }
}
