//! Edge-counting semantic distance over a Roget-style thesaurus.
//!
//! The thesaurus is a fixed nine-level tree:
//!
//! ```text
//! T -> Class -> Section -> Sub-Section -> Head Group -> Head
//!   -> part-of-speech paragraph -> paragraph -> semicolon group
//! ```
//!
//! Words and phrases live inside semicolon groups. The distance between two
//! occurrences is the number of tree edges between their groups, so it is
//! always one of `0, 2, 4, .., 16`, and the similarity of two words is
//! `16 - min distance` over all pairs of their occurrences.
//!
//! The crate is `no_std` and only needs `alloc`. File IO, the command line
//! and the question/pair file formats live in the companion `roget` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bench;
pub mod fixture;
pub mod index;
pub mod interchange;
pub mod similarity;
pub mod solver;
pub mod taxonomy;
pub mod validate;

pub use bench::{
    evaluate_pairs, outlier_report, pearson, CorrelationError, HumanScale, NotFoundPolicy,
    Outlier, PairReport, PairRow, ScoredPair,
};
pub use index::{normalize, Index};
pub use interchange::{parse_interchange, to_interchange, ParseError, ParseErrorKind};
pub use similarity::{NotFound, SimilarityScore, Tier, WordDistance};
pub use solver::{
    filter_noun_only, score_test, tokenize_choice, Answer, ChoiceEvaluation, Credit, Percent,
    QuestionError, QuestionResult, Score, ScoreError, Solver, SynonymQuestion, TestReport,
};
pub use taxonomy::{
    BuildError, Distance, Entry, Level, Node, NodeId, Pos, Reference, TaxonomyError, Thesaurus,
    ThesaurusBuilder, TreePath,
};
pub use validate::{validate_structure, LevelCounts, StructureReport, Violation};
