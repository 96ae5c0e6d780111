//! Structure report: node counts per level plus invariant checks.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::index::normalize;
use crate::taxonomy::{Level, NodeId, Thesaurus};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LevelCounts {
    pub classes: usize,
    pub sections: usize,
    pub sub_sections: usize,
    pub head_groups: usize,
    pub heads: usize,
    pub pos_paragraphs: usize,
    pub paragraphs: usize,
    pub semicolon_groups: usize,
    pub entries: usize,
}

impl LevelCounts {
    /// Top five levels of the 1987 Penguin edition.
    pub const FULL_EDITION_TOP: [usize; 5] = [8, 39, 79, 596, 990];

    pub fn top_levels(&self) -> [usize; 5] {
        [self.classes, self.sections, self.sub_sections, self.head_groups, self.heads]
    }

    fn bump(&mut self, level: Level) {
        match level {
            Level::Root => {}
            Level::Class => self.classes += 1,
            Level::Section => self.sections += 1,
            Level::SubSection => self.sub_sections += 1,
            Level::HeadGroup => self.head_groups += 1,
            Level::Head => self.heads += 1,
            Level::PosParagraph => self.pos_paragraphs += 1,
            Level::Paragraph => self.paragraphs += 1,
            Level::SemicolonGroup => self.semicolon_groups += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoClasses,
    ExtraRoot(NodeId),
    LevelSkip { node: NodeId, level: Level, parent_level: Level },
    MissingHeadNumber(NodeId),
    DuplicateHead(u32),
    /// A non-leaf node with nothing under it.
    Childless { node: NodeId, level: Level },
    PosMismatch { entry: usize },
    BlankEntry { entry: usize },
    Unindexed { entry: usize, text: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoClasses => f.write_str("no classes"),
            Violation::ExtraRoot(n) => write!(f, "node {n} has no parent but is not the root"),
            Violation::LevelSkip { node, level, parent_level } => {
                write!(f, "{level} {node} sits under a {parent_level}")
            }
            Violation::MissingHeadNumber(n) => write!(f, "head {n} has no number"),
            Violation::DuplicateHead(h) => write!(f, "head number {h} used more than once"),
            Violation::Childless { node, level } => write!(f, "empty {level} {node}"),
            Violation::PosMismatch { entry } => {
                write!(f, "entry {entry} has a part of speech different from its paragraph")
            }
            Violation::BlankEntry { entry } => write!(f, "entry {entry} is blank"),
            Violation::Unindexed { text, .. } => write!(f, "entry {text:?} missing from the index"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub counts: LevelCounts,
    pub violations: Vec<Violation>,
}

impl StructureReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Whether the class/section/sub-section/head-group/head counts are those
    /// of the full 1987 edition.
    pub fn matches_full_edition(&self) -> bool {
        self.counts.top_levels() == LevelCounts::FULL_EDITION_TOP
    }
}

pub fn validate_structure(thesaurus: &Thesaurus) -> StructureReport {
    let mut counts = LevelCounts::default();
    let mut violations = Vec::new();
    let mut heads = BTreeSet::new();

    for (id, node) in thesaurus.nodes() {
        counts.bump(node.level());
        match node.parent() {
            None if id != thesaurus.root() => violations.push(Violation::ExtraRoot(id)),
            None => {}
            Some(p) => {
                let parent_level = thesaurus.node(p).map(|n| n.level()).unwrap_or(Level::Root);
                if Some(parent_level) != node.level().parent() {
                    violations.push(Violation::LevelSkip { node: id, level: node.level(), parent_level });
                }
            }
        }
        if node.level() == Level::Head {
            match node.head_number() {
                None => violations.push(Violation::MissingHeadNumber(id)),
                Some(h) if !heads.insert(h) => violations.push(Violation::DuplicateHead(h)),
                Some(_) => {}
            }
        }
        let leafy = matches!(node.level(), Level::Root | Level::SemicolonGroup);
        if !leafy && node.children().is_empty() {
            violations.push(Violation::Childless { node: id, level: node.level() });
        }
    }
    if counts.classes == 0 {
        violations.insert(0, Violation::NoClasses);
    }

    for (r, entry) in thesaurus.entries() {
        counts.entries += 1;
        let i = r.entry_index();
        let block = thesaurus.ancestor_at(entry.semicolon_group(), Level::PosParagraph);
        let block_pos = block.and_then(|b| thesaurus.node(b).ok()).and_then(|n| n.pos());
        if block_pos != Some(entry.pos()) {
            violations.push(Violation::PosMismatch { entry: i });
        }
        let key = normalize(entry.text());
        if key.is_empty() {
            violations.push(Violation::BlankEntry { entry: i });
        } else if !thesaurus.index().get(&key).contains(&(i as u32)) {
            violations.push(Violation::Unindexed { entry: i, text: entry.text().into() });
        }
    }

    StructureReport { counts, violations }
}
