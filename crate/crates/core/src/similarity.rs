//! Word-level distance and similarity over reference sets.
//!
//! A word usually has several references. The word distance is the minimum
//! reference distance over all pairs, and the "paths" of that length are the
//! minimizing pairs themselves: in a tree each pair has exactly one path.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::index::normalize;
use crate::taxonomy::{Distance, Reference, Thesaurus, TreePath};

/// One or both words are missing from the index.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("not found: {}", missing.join(", "))]
pub struct NotFound {
    pub missing: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordDistance {
    pub distance: Distance,
    /// Every reference pair at `distance`, ordered by document position.
    pub pairs: Vec<(Reference, Reference)>,
}

impl WordDistance {
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }
}

/// `16 - distance`, so always in `0..=16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimilarityScore(u8);

impl SimilarityScore {
    pub const MAX: u8 = 16;

    pub fn from_distance(distance: Distance) -> SimilarityScore {
        SimilarityScore(Self::MAX - distance.edges())
    }

    pub fn new(value: u8) -> Option<SimilarityScore> {
        (value <= Self::MAX).then_some(SimilarityScore(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn tier(self) -> Tier {
        match self.0 {
            16 => Tier::High,
            12..=15 => Tier::Intermediate,
            _ => Tier::Low,
        }
    }
}

impl fmt::Display for SimilarityScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// 16 is high (same semicolon group), 12 and 14 intermediate, 10 and below low.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tier {
    High,
    Intermediate,
    Low,
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tier::High => "High",
            Tier::Intermediate => "Intermediate",
            Tier::Low => "Low",
        })
    }
}

impl Thesaurus {
    /// Minimum distance over the Cartesian product of both reference sets,
    /// across all parts of speech.
    pub fn word_min_distance(&self, w1: &str, w2: &str) -> Result<WordDistance, NotFound> {
        self.word_extreme_distance(w1, w2, |candidate, best| candidate < best)
    }

    /// Maximum over the same product; used to display the longest path.
    pub fn word_max_distance(&self, w1: &str, w2: &str) -> Result<WordDistance, NotFound> {
        self.word_extreme_distance(w1, w2, |candidate, best| candidate > best)
    }

    pub fn similarity(&self, w1: &str, w2: &str) -> Result<SimilarityScore, NotFound> {
        self.word_min_distance(w1, w2).map(|d| SimilarityScore::from_distance(d.distance))
    }

    /// One tree path per minimizing reference pair.
    pub fn shortest_paths(&self, w1: &str, w2: &str) -> Result<Vec<TreePath>, NotFound> {
        let found = self.word_min_distance(w1, w2)?;
        Ok(found
            .pairs
            .iter()
            .map(|&(a, b)| self.tree_path(a, b).expect("references come from this thesaurus"))
            .collect())
    }

    /// Minimum distance between two normalized keys, or `None` when either
    /// is not indexed.
    pub(crate) fn key_min_distance(&self, k1: &str, k2: &str) -> Option<WordDistance> {
        self.extreme_over_keys(k1, k2, |candidate, best| candidate < best)
    }

    fn word_extreme_distance(
        &self,
        w1: &str,
        w2: &str,
        better: impl Fn(Distance, Distance) -> bool,
    ) -> Result<WordDistance, NotFound> {
        let (k1, k2) = (normalize(w1), normalize(w2));
        self.extreme_over_keys(&k1, &k2, better).ok_or_else(|| {
            let mut missing = Vec::new();
            if self.index().get(&k1).is_empty() {
                missing.push(String::from(w1.trim()));
            }
            if self.index().get(&k2).is_empty() && (k1 != k2 || missing.is_empty()) {
                missing.push(String::from(w2.trim()));
            }
            NotFound { missing }
        })
    }

    fn extreme_over_keys(
        &self,
        k1: &str,
        k2: &str,
        better: impl Fn(Distance, Distance) -> bool,
    ) -> Option<WordDistance> {
        let (left, right) = (self.index().get(k1), self.index().get(k2));
        if left.is_empty() || right.is_empty() {
            return None;
        }
        let mut best: Option<Distance> = None;
        let mut pairs = Vec::new();
        for &a in left {
            for &b in right {
                let d = self.entry_distance(a, b);
                match best {
                    Some(current) if better(d, current) => {
                        best = Some(d);
                        pairs.clear();
                    }
                    Some(current) if d != current => continue,
                    None => best = Some(d),
                    _ => {}
                }
                pairs.push((self.reference(a), self.reference(b)));
            }
        }
        best.map(|distance| WordDistance { distance, pairs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    #[test]
    fn feline_lynx_is_two() {
        let t = fixture::thesaurus();
        let d = t.word_min_distance("feline", "lynx").unwrap();
        assert_eq!(d.distance.edges(), 2);
        assert_eq!(d.pair_count(), 1);
        assert_eq!(t.similarity("feline", "lynx").unwrap().value(), 14);
    }

    #[test]
    fn ode_poem_has_two_paths_of_length_two() {
        let t = fixture::thesaurus();
        let d = t.word_min_distance("ode", "poem").unwrap();
        assert_eq!((d.distance.edges(), d.pair_count()), (2, 2));
        let paths = t.shortest_paths("ode", "poem").unwrap();
        assert_eq!(paths.len(), 2);
        assert!(paths.iter().all(|p| p.edges() == 2));
    }

    #[test]
    fn same_word_is_zero_with_one_path_per_reference() {
        let t = fixture::thesaurus();
        let d = t.word_min_distance("Feline", "feline").unwrap();
        assert_eq!(d.distance, Distance::ZERO);
        assert_eq!(d.pair_count(), t.references("feline").len());
        for p in t.shortest_paths("feline", "feline").unwrap() {
            assert_eq!(p.edges(), 0);
            assert_eq!(p.to_string(), "feline ; feline");
        }
    }

    #[test]
    fn not_found_names_missing_words() {
        let t = fixture::thesaurus();
        let err = t.word_min_distance("feline", "zzzz").unwrap_err();
        assert_eq!(err.missing, ["zzzz"]);
        assert_eq!(err.to_string(), "not found: zzzz");
        let err = t.similarity("qqq", "zzzz").unwrap_err();
        assert_eq!(err.missing, ["qqq", "zzzz"]);
        let err = t.similarity("qqq", "QQQ").unwrap_err();
        assert_eq!(err.missing, ["qqq"]);
    }

    #[test]
    fn tiers() {
        let tier = |v| SimilarityScore::new(v).unwrap().tier();
        assert_eq!(tier(16), Tier::High);
        assert_eq!(tier(14), Tier::Intermediate);
        assert_eq!(tier(12), Tier::Intermediate);
        assert_eq!(tier(10), Tier::Low);
        assert_eq!(tier(0), Tier::Low);
        assert!(SimilarityScore::new(17).is_none());
    }
}
