//! Small bundled thesaurus used by tests, examples and the CLI demo.
//!
//! Abridged and hand-built; not the licensed 1987 content.

use crate::interchange::parse_interchange;
use crate::taxonomy::Thesaurus;

pub const FIXTURE_TEXT: &str = include_str!("../data/fixture.thesaurus");

pub fn thesaurus() -> Thesaurus {
    parse_interchange(FIXTURE_TEXT).expect("bundled fixture parses")
}
