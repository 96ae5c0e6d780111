//! Human-judgment benchmarks: Pearson correlation between human similarity
//! scores and thesaurus similarity for a list of word pairs.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::similarity::{SimilarityScore, Tier};
use crate::taxonomy::Thesaurus;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CorrelationError {
    #[error("correlation undefined: {0} x values but {1} y values")]
    LengthMismatch(usize, usize),
    #[error("correlation undefined: need at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("correlation undefined: zero variance")]
    ZeroVariance,
    #[error("correlation undefined: no pair was found in the thesaurus")]
    NoScoredPairs,
}

/// Pearson product-moment correlation, computed from centered sums.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64, CorrelationError> {
    if xs.len() != ys.len() {
        return Err(CorrelationError::LengthMismatch(xs.len(), ys.len()));
    }
    let n = xs.len();
    if n < 2 {
        return Err(CorrelationError::TooFewPoints(n));
    }
    let constant = |v: &[f64]| v.iter().all(|&x| x == v[0]);
    if constant(xs) || constant(ys) {
        return Err(CorrelationError::ZeroVariance);
    }
    let mean = |v: &[f64]| v.iter().sum::<f64>() / n as f64;
    let (mx, my) = (mean(xs), mean(ys));
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mx, y - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    let r = sxy / (libm::sqrt(sxx) * libm::sqrt(syy));
    Ok(r.clamp(-1.0, 1.0))
}

/// Declared range of the human scores in a pair file (0-4 for
/// Rubenstein-Goodenough and Miller-Charles, 0-10 for WordSimilarity-353).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HumanScale {
    pub min: f64,
    pub max: f64,
}

impl HumanScale {
    pub fn contains(&self, score: f64) -> bool {
        self.min <= score && score <= self.max
    }

    /// Maps a human score onto the 0-16 similarity range.
    pub fn to_similarity_range(&self, score: f64) -> f64 {
        (score - self.min) / (self.max - self.min) * f64::from(SimilarityScore::MAX)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScoredPair {
    pub word1: String,
    pub word2: String,
    pub human: f64,
}

/// What to do with pairs whose words are missing from the thesaurus.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NotFoundPolicy {
    /// Leave the pair out of the correlation.
    #[default]
    Skip,
    /// Score the pair as similarity 0.
    Zero,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairRow {
    pub pair: ScoredPair,
    /// `None` when a word is not in the thesaurus.
    pub system: Option<SimilarityScore>,
}

impl PairRow {
    pub fn tier(&self) -> Option<Tier> {
        self.system.map(SimilarityScore::tier)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairReport {
    pub rows: Vec<PairRow>,
    pub correlation: f64,
    pub policy: NotFoundPolicy,
    pub not_found: usize,
    pub scale: HumanScale,
}

pub fn evaluate_pairs(
    thesaurus: &Thesaurus,
    pairs: &[ScoredPair],
    scale: HumanScale,
    policy: NotFoundPolicy,
) -> Result<PairReport, CorrelationError> {
    let rows: Vec<PairRow> = pairs
        .iter()
        .map(|p| PairRow { pair: p.clone(), system: thesaurus.similarity(&p.word1, &p.word2).ok() })
        .collect();
    let not_found = rows.iter().filter(|r| r.system.is_none()).count();
    if not_found == rows.len() {
        return Err(CorrelationError::NoScoredPairs);
    }
    let (human, system): (Vec<f64>, Vec<f64>) = rows
        .iter()
        .filter_map(|r| match (r.system, policy) {
            (Some(s), _) => Some((r.pair.human, f64::from(s.value()))),
            (None, NotFoundPolicy::Zero) => Some((r.pair.human, 0.0)),
            (None, NotFoundPolicy::Skip) => None,
        })
        .unzip();
    let correlation = pearson(&human, &system)?;
    Ok(PairReport { rows, correlation, policy, not_found, scale })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outlier<'a> {
    pub row: &'a PairRow,
    /// `|human rescaled to 0-16 - system|`.
    pub discrepancy: f64,
}

/// Pairs the thesaurus rates intermediate or high (12 or more) although the
/// human score is below `threshold`, and pairs it rates below 12 although
/// the human score is at or above `threshold`. Largest discrepancy first.
pub fn outlier_report(report: &PairReport, threshold: f64) -> Vec<Outlier<'_>> {
    let mut out: Vec<Outlier<'_>> = report
        .rows
        .iter()
        .filter_map(|row| {
            let system = row.system.or(match report.policy {
                NotFoundPolicy::Zero => SimilarityScore::new(0),
                NotFoundPolicy::Skip => None,
            })?;
            let human_low = row.pair.human < threshold;
            let system_high = system.value() >= 12;
            (human_low == system_high).then(|| Outlier {
                row,
                discrepancy: libm::fabs(
                    report.scale.to_similarity_range(row.pair.human) - f64::from(system.value()),
                ),
            })
        })
        .collect();
    out.sort_by(|a, b| b.discrepancy.total_cmp(&a.discrepancy));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pearson_small_cases() {
        assert!((pearson(&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]).unwrap() - 1.0).abs() < 1e-12);
        assert!((pearson(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap() + 1.0).abs() < 1e-12);
        // 5.5 / sqrt(5 * 8.75)
        let r = pearson(&[1.0, 2.0, 3.0, 4.0], &[1.0, 3.0, 2.0, 5.0]).unwrap();
        assert!((r - 0.831_521_840_620_3).abs() < 1e-12, "{r}");
    }

    #[test]
    fn pearson_errors() {
        assert_eq!(pearson(&[1.0], &[1.0]), Err(CorrelationError::TooFewPoints(1)));
        assert_eq!(pearson(&[1.0, 2.0], &[1.0]), Err(CorrelationError::LengthMismatch(2, 1)));
        assert_eq!(pearson(&[0.1, 0.1, 0.1], &[1.0, 2.0, 3.0]), Err(CorrelationError::ZeroVariance));
    }

    fn pair(a: &str, b: &str, human: f64) -> ScoredPair {
        ScoredPair { word1: a.into(), word2: b.into(), human }
    }

    const SCALE: HumanScale = HumanScale { min: 0.0, max: 4.0 };

    #[test]
    fn not_found_policies() {
        let t = crate::fixture::thesaurus();
        let pairs = [
            pair("journey's end", "terminus", 4.0),
            pair("devotion", "abnormal affection", 3.0),
            pair("nag", "like greased lightning", 0.5),
            pair("zzzz", "terminus", 3.9),
        ];
        let skip = evaluate_pairs(&t, &pairs, SCALE, NotFoundPolicy::Skip).unwrap();
        assert_eq!(skip.not_found, 1);
        let zero = evaluate_pairs(&t, &pairs, SCALE, NotFoundPolicy::Zero).unwrap();
        let expected_zero = pearson(&[4.0, 3.0, 0.5, 3.9], &[16.0, 14.0, 0.0, 0.0]).unwrap();
        assert_eq!(zero.correlation, expected_zero);
        assert!(skip.correlation > zero.correlation);

        let missing = [pair("zzzz", "qqqq", 1.0)];
        assert_eq!(
            evaluate_pairs(&t, &missing, SCALE, NotFoundPolicy::Zero),
            Err(CorrelationError::NoScoredPairs)
        );
    }

    #[test]
    fn outliers_in_both_directions() {
        let t = crate::fixture::thesaurus();
        let pairs = [
            pair("glass", "jewel", 1.78),       // 16 but judged low
            pair("nag", "like greased lightning", 3.5), // 0 but judged high
            pair("journey's end", "terminus", 3.9),
            pair("finance", "apply for a loan", 0.4),
        ];
        let report = evaluate_pairs(&t, &pairs, SCALE, NotFoundPolicy::Skip).unwrap();
        let out = outlier_report(&report, 2.0);
        let names: Vec<&str> = out.iter().map(|o| o.row.pair.word1.as_str()).collect();
        assert_eq!(names, ["nag", "glass"]);
        assert!((out[0].discrepancy - 14.0).abs() < 1e-12);
        assert!(outlier_report(&report, -1.0).iter().all(|o| o.row.system.unwrap().value() < 12));
    }

    #[test]
    fn no_discrepancies_is_empty() {
        let t = crate::fixture::thesaurus();
        let pairs = [pair("journey's end", "terminus", 3.9), pair("finance", "apply for a loan", 0.4)];
        let report = evaluate_pairs(&t, &pairs, SCALE, NotFoundPolicy::Skip).unwrap();
        assert!(outlier_report(&report, 2.0).is_empty());
    }
}
