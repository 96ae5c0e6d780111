//! Four-choice synonym questions.
//!
//! The answer is the choice closest to the problem word. Equal distances are
//! broken by the number of minimizing reference pairs ("paths"). Choices that
//! are not indexed as a whole are split into words, skipping `and`, `to` and
//! `be`, and the closest word stands for the phrase. Ties that survive
//! tie-breaking earn partial credit: 1/2, 1/3 or 1/4 when the gold choice is
//! among two, three or four tied choices.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::index::normalize;
use crate::similarity::WordDistance;
use crate::taxonomy::{Distance, Pos, Thesaurus};

pub const STOP_WORDS: [&str; 3] = ["and", "to", "be"];

/// Normalized whitespace tokens of a choice, without stop words.
pub fn tokenize_choice(choice: &str) -> Vec<String> {
    normalize(choice)
        .split(' ')
        .filter(|t| !t.is_empty() && !STOP_WORDS.contains(t))
        .map(ToString::to_string)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum QuestionError {
    #[error("gold index {0} out of range 0-3")]
    GoldOutOfRange(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynonymQuestion {
    pub problem: String,
    pub choices: [String; 4],
    pub gold: usize,
    pub source_tag: String,
}

impl SynonymQuestion {
    pub fn new(
        problem: impl Into<String>,
        choices: [&str; 4],
        gold: usize,
    ) -> Result<SynonymQuestion, QuestionError> {
        if gold > 3 {
            return Err(QuestionError::GoldOutOfRange(gold));
        }
        Ok(SynonymQuestion {
            problem: problem.into(),
            choices: choices.map(String::from),
            gold,
            source_tag: String::new(),
        })
    }

    pub fn with_source(mut self, tag: impl Into<String>) -> Self {
        self.source_tag = tag.into();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceEvaluation {
    pub index: usize,
    /// `None` when no token of the choice is indexed.
    pub distance: Option<Distance>,
    pub pair_count: usize,
    /// The whole choice, or the token that reached the minimum first.
    pub contributing_token: Option<String>,
    /// Parts of speech of the first minimizing pair, for display.
    pub pos_pair: Option<(Pos, Pos)>,
    pub tokens_not_found: Vec<String>,
}

/// Credit for one question, in twelfths so that 1/4, 1/3 and 1/2 are exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Credit(u8);

impl Credit {
    pub const ZERO: Credit = Credit(0);
    pub const QUARTER: Credit = Credit(3);
    pub const THIRD: Credit = Credit(4);
    pub const HALF: Credit = Credit(6);
    pub const FULL: Credit = Credit(12);

    /// Credit for a gold choice sharing first place with `tied - 1` others.
    pub fn shared(tied: usize) -> Credit {
        match tied {
            0 => Credit::ZERO,
            1 => Credit::FULL,
            2 => Credit::HALF,
            3 => Credit::THIRD,
            _ => Credit::QUARTER,
        }
    }

    pub fn twelfths(self) -> u8 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0) / 12.0
    }
}

impl fmt::Display for Credit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Score { twelfths: u64::from(self.0) }.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Chosen {
        index: usize,
        /// Choices still tied after path-count tie-breaking (including
        /// `index`); empty when the winner is unique.
        tied: Vec<usize>,
    },
    ProblemNotFound,
    NoChoiceFound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuestionResult {
    pub answer: Answer,
    /// Empty when the problem word itself is not indexed.
    pub per_choice: Vec<ChoiceEvaluation>,
    pub correct: bool,
    pub credit: Credit,
}

impl QuestionResult {
    pub fn chosen(&self) -> Option<usize> {
        match self.answer {
            Answer::Chosen { index, .. } => Some(index),
            _ => None,
        }
    }

    pub fn is_tie(&self) -> bool {
        matches!(&self.answer, Answer::Chosen { tied, .. } if !tied.is_empty())
    }

    pub fn tied_indices(&self) -> &[usize] {
        match &self.answer {
            Answer::Chosen { tied, .. } => tied,
            _ => &[],
        }
    }

    pub fn is_unanswerable(&self) -> bool {
        !matches!(self.answer, Answer::Chosen { .. })
    }

    /// `CORRECT`, `INCORRECT`, `TIE` or `NOT-FOUND`.
    pub fn verdict(&self) -> &'static str {
        match &self.answer {
            Answer::Chosen { tied, .. } if !tied.is_empty() => "TIE",
            Answer::Chosen { .. } if self.correct => "CORRECT",
            Answer::Chosen { .. } => "INCORRECT",
            _ => "NOT-FOUND",
        }
    }

    /// Distinct tokens that could not be looked up in this question.
    pub fn other_words_not_found(&self) -> usize {
        let mut tokens: Vec<&str> =
            self.per_choice.iter().flat_map(|c| c.tokens_not_found.iter().map(String::as_str)).collect();
        tokens.sort_unstable();
        tokens.dedup();
        tokens.len()
    }
}

/// A sum of credits, in twelfths.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Score {
    pub twelfths: u64,
}

impl Score {
    pub fn as_f64(self) -> f64 {
        self.twelfths as f64 / 12.0
    }

    /// Hundredths, rounded half up.
    pub fn hundredths(self) -> u64 {
        (self.twelfths * 100 * 2 + 12) / 24
    }
}

/// Two decimals with trailing zeros dropped: `63`, `17.5`, `62.33`.
impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = self.hundredths();
        let (whole, frac) = (h / 100, h % 100);
        match frac {
            0 => write!(f, "{whole}"),
            _ if frac % 10 == 0 => write!(f, "{whole}.{}", frac / 10),
            _ => write!(f, "{whole}.{frac:02}"),
        }
    }
}

/// Percentage with two decimals, rounded half up.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Percent {
    pub hundredths: u64,
}

impl Percent {
    pub fn of(score: Score, questions: usize) -> Percent {
        let num = score.twelfths * 100 * 100;
        let den = 12 * questions as u64;
        Percent { hundredths: if den == 0 { 0 } else { (2 * num + den) / (2 * den) } }
    }

    pub fn as_f64(self) -> f64 {
        self.hundredths as f64 / 100.0
    }
}

impl fmt::Display for Percent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{:02}", self.hundredths / 100, self.hundredths % 100)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TestReport {
    pub question_count: usize,
    pub correct: usize,
    pub questions_with_ties: usize,
    pub score: Score,
    pub percent: Percent,
    pub questions_not_found: usize,
    pub other_words_not_found: usize,
}

impl TestReport {
    /// Aggregates results. Unanswerable questions stay in the denominator.
    pub fn from_results(results: &[QuestionResult]) -> TestReport {
        let mut report = TestReport { question_count: results.len(), ..TestReport::default() };
        for r in results {
            report.correct += usize::from(r.correct);
            report.questions_with_ties += usize::from(r.is_tie());
            report.score.twelfths += u64::from(r.credit.twelfths());
            report.questions_not_found += usize::from(r.is_unanswerable());
            report.other_words_not_found += r.other_words_not_found();
        }
        report.percent = Percent::of(report.score, report.question_count);
        report
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ScoreError {
    #[error("no questions to score")]
    Empty,
}

/// Answers questions against one thesaurus.
#[derive(Clone, Copy, Debug)]
pub struct Solver<'t> {
    thesaurus: &'t Thesaurus,
}

impl<'t> Solver<'t> {
    pub fn new(thesaurus: &'t Thesaurus) -> Self {
        Solver { thesaurus }
    }

    pub fn evaluate_choice(&self, problem: &str, choice: &str) -> ChoiceEvaluation {
        self.evaluate(&normalize(problem), choice, 0)
    }

    fn evaluate(&self, problem_key: &str, choice: &str, index: usize) -> ChoiceEvaluation {
        let t = self.thesaurus;
        let whole = normalize(choice);
        let mut eval = ChoiceEvaluation {
            index,
            distance: None,
            pair_count: 0,
            contributing_token: None,
            pos_pair: None,
            tokens_not_found: Vec::new(),
        };

        if let Some(found) = t.key_min_distance(problem_key, &whole) {
            self.record(&mut eval, &whole, &found);
            return eval;
        }
        for token in tokenize_choice(choice) {
            let Some(found) = t.key_min_distance(problem_key, &token) else {
                if t.index().get(&token).is_empty() {
                    eval.tokens_not_found.push(token);
                }
                continue;
            };
            match eval.distance {
                Some(best) if found.distance > best => {}
                Some(best) if found.distance == best => eval.pair_count += found.pair_count(),
                _ => self.record(&mut eval, &token, &found),
            }
        }
        eval
    }

    fn record(&self, eval: &mut ChoiceEvaluation, token: &str, found: &WordDistance) {
        let (a, b) = found.pairs[0];
        let pos = |r| self.thesaurus.entry(r).expect("own reference").pos();
        eval.distance = Some(found.distance);
        eval.pair_count = found.pair_count();
        eval.contributing_token = Some(token.to_string());
        eval.pos_pair = Some((pos(a), pos(b)));
    }

    pub fn answer(&self, q: &SynonymQuestion) -> QuestionResult {
        let problem = normalize(&q.problem);
        if self.thesaurus.index().get(&problem).is_empty() {
            return QuestionResult {
                answer: Answer::ProblemNotFound,
                per_choice: Vec::new(),
                correct: false,
                credit: Credit::ZERO,
            };
        }
        let per_choice: Vec<ChoiceEvaluation> =
            q.choices.iter().enumerate().map(|(i, c)| self.evaluate(&problem, c, i)).collect();

        // Smallest distance first, then most paths.
        let best = per_choice
            .iter()
            .filter_map(|c| c.distance.map(|d| (d, core::cmp::Reverse(c.pair_count))))
            .min();
        let Some(best) = best else {
            return QuestionResult { answer: Answer::NoChoiceFound, per_choice, correct: false, credit: Credit::ZERO };
        };
        let leaders: Vec<usize> = per_choice
            .iter()
            .filter(|c| c.distance == Some(best.0) && c.pair_count == best.1 .0)
            .map(|c| c.index)
            .collect();

        let index = leaders[0];
        let gold_leads = leaders.contains(&q.gold);
        let credit = if gold_leads { Credit::shared(leaders.len()) } else { Credit::ZERO };
        let tied = if leaders.len() > 1 { leaders } else { Vec::new() };
        let correct = tied.is_empty() && index == q.gold;
        QuestionResult { answer: Answer::Chosen { index, tied }, per_choice, correct, credit }
    }
}

/// Answers every question in order and aggregates the report.
pub fn score_test(
    thesaurus: &Thesaurus,
    questions: &[SynonymQuestion],
) -> Result<(Vec<QuestionResult>, TestReport), ScoreError> {
    if questions.is_empty() {
        return Err(ScoreError::Empty);
    }
    let solver = Solver::new(thesaurus);
    let results: Vec<QuestionResult> = questions.iter().map(|q| solver.answer(q)).collect();
    let report = TestReport::from_results(&results);
    Ok((results, report))
}

/// Keeps questions whose problem word and every choice have a noun reading.
/// A phrase that is not indexed whole qualifies through any of its tokens.
pub fn filter_noun_only(thesaurus: &Thesaurus, questions: &[SynonymQuestion]) -> Vec<SynonymQuestion> {
    let has_noun = |key: &str| {
        thesaurus.references_for_key(key).into_iter().any(|r| {
            thesaurus.entry(r).map(|e| e.pos() == Pos::Noun).unwrap_or(false)
        })
    };
    let choice_ok = |choice: &str| {
        let whole = normalize(choice);
        if !thesaurus.index().get(&whole).is_empty() {
            return has_noun(&whole);
        }
        tokenize_choice(choice).iter().any(|t| has_noun(t))
    };
    questions
        .iter()
        .filter(|q| has_noun(&normalize(&q.problem)) && q.choices.iter().all(|c| choice_ok(c)))
        .cloned()
        .collect()
}
