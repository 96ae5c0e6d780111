//! The nine-level thesaurus tree, its construction, and tree distances.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::sync::atomic::{AtomicU32, Ordering};

use thiserror::Error;

use crate::index::{normalize, Index};

/// Depth of a node in the taxonomy. `Root` is the single node named "T".
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Level {
    Root = 0,
    Class = 1,
    Section = 2,
    SubSection = 3,
    HeadGroup = 4,
    Head = 5,
    PosParagraph = 6,
    Paragraph = 7,
    SemicolonGroup = 8,
}

impl Level {
    pub const ALL: [Level; 9] = [
        Level::Root,
        Level::Class,
        Level::Section,
        Level::SubSection,
        Level::HeadGroup,
        Level::Head,
        Level::PosParagraph,
        Level::Paragraph,
        Level::SemicolonGroup,
    ];

    pub const fn depth(self) -> usize {
        self as usize
    }

    pub fn from_depth(depth: usize) -> Option<Level> {
        Self::ALL.get(depth).copied()
    }

    pub fn parent(self) -> Option<Level> {
        self.depth().checked_sub(1).and_then(Level::from_depth)
    }

    pub fn child(self) -> Option<Level> {
        Level::from_depth(self.depth() + 1)
    }

    pub fn name(self) -> &'static str {
        match self {
            Level::Root => "root",
            Level::Class => "class",
            Level::Section => "section",
            Level::SubSection => "sub-section",
            Level::HeadGroup => "head group",
            Level::Head => "head",
            Level::PosParagraph => "part-of-speech paragraph",
            Level::Paragraph => "paragraph",
            Level::SemicolonGroup => "semicolon group",
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Part of speech of a POS paragraph and of every reference beneath it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pos {
    Noun,
    Adjective,
    Verb,
    Adverb,
}

impl Pos {
    pub const ALL: [Pos; 4] = [Pos::Noun, Pos::Adjective, Pos::Verb, Pos::Adverb];

    /// Record code used by the interchange format.
    pub fn code(self) -> &'static str {
        match self {
            Pos::Noun => "N",
            Pos::Adjective => "ADJ",
            Pos::Verb => "VB",
            Pos::Adverb => "ADV",
        }
    }

    pub fn from_code(code: &str) -> Option<Pos> {
        Self::ALL.into_iter().find(|p| p.code() == code)
    }
}

/// Printed with a trailing period, as in `cat 365 N.`.
impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.", self.code())
    }
}

/// Dense node identifier, stable within one loaded thesaurus only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(index: usize) -> NodeId {
        NodeId(index as u32)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    level: Level,
    label: String,
    ordinal: u32,
    parent: Option<NodeId>,
    children: Vec<NodeId>,
    head_number: Option<u32>,
    pos: Option<Pos>,
    entries: Range<u32>,
}

impl Node {
    pub fn level(&self) -> Level {
        self.level
    }

    /// Raw label. Heads are displayed with their number prefixed, see
    /// [`Thesaurus::display_label`].
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ordinal(&self) -> u32 {
        self.ordinal
    }

    pub fn parent(&self) -> Option<NodeId> {
        self.parent
    }

    pub fn children(&self) -> &[NodeId] {
        &self.children
    }

    /// Only set on `Head` nodes.
    pub fn head_number(&self) -> Option<u32> {
        self.head_number
    }

    /// Only set on `PosParagraph` nodes.
    pub fn pos(&self) -> Option<Pos> {
        self.pos
    }
}

/// One word or phrase as printed in a semicolon group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    text: String,
    group: NodeId,
    pos: Pos,
    head_number: u32,
}

impl Entry {
    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn semicolon_group(&self) -> NodeId {
        self.group
    }

    pub fn pos(&self) -> Pos {
        self.pos
    }

    pub fn head_number(&self) -> u32 {
        self.head_number
    }
}

/// Handle to one entry of a specific thesaurus instance.
///
/// Ordering follows document order within a thesaurus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Reference {
    owner: u32,
    entry: u32,
}

impl Reference {
    /// Position of the entry in document order.
    pub fn entry_index(self) -> usize {
        self.entry as usize
    }
}

/// Number of tree edges between two semicolon groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Distance(u8);

impl Distance {
    pub const ZERO: Distance = Distance(0);
    pub const MAX: Distance = Distance(16);

    /// Accepts only the even values `0..=16`.
    pub fn new(edges: u8) -> Option<Distance> {
        (edges <= 16 && edges.is_multiple_of(2)).then_some(Distance(edges))
    }

    pub fn edges(self) -> u8 {
        self.0
    }

    fn below(apex: Level) -> Distance {
        Distance(2 * (Level::SemicolonGroup.depth() - apex.depth()) as u8)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TaxonomyError {
    #[error("invalid node {0}")]
    InvalidNode(NodeId),
    #[error("node {node} is a {level}, not a semicolon group")]
    NotASemicolonGroup { node: NodeId, level: Level },
    #[error("reference does not belong to this thesaurus")]
    ForeignReference,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("a {level} must be nested in a {parent}, but no {parent} is open")]
    MissingParent { level: Level, parent: Level },
    #[error("head numbers must be positive")]
    ZeroHeadNumber,
    #[error("duplicate head number {0}")]
    DuplicateHead(u32),
    #[error("empty semicolon group")]
    EmptyGroup,
    #[error("empty entry in semicolon group")]
    EmptyEntry,
    #[error("entry {0:?} contains '|'")]
    PipeInEntry(String),
}

static NEXT_OWNER: AtomicU32 = AtomicU32::new(1);

/// An immutable, fully indexed thesaurus.
///
/// Built once with [`ThesaurusBuilder`] (or parsed from the interchange
/// format) and then only read, so it can be shared freely across threads.
#[derive(Clone, Debug)]
pub struct Thesaurus {
    owner: u32,
    nodes: Vec<Node>,
    // ancestors[n][l] is the ancestor of n at level l, for l <= level(n).
    ancestors: Vec<[u32; 9]>,
    entries: Vec<Entry>,
    index: Index,
}

/// Structural equality: same tree, same entries. Instance identity is ignored.
impl PartialEq for Thesaurus {
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes && self.entries == other.entries && self.index == other.index
    }
}

impl Eq for Thesaurus {}

impl Thesaurus {
    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, id: NodeId) -> Result<&Node, TaxonomyError> {
        self.nodes.get(id.index()).ok_or(TaxonomyError::InvalidNode(id))
    }

    pub fn nodes(&self) -> impl Iterator<Item = (NodeId, &Node)> + '_ {
        self.nodes.iter().enumerate().map(|(i, n)| (NodeId::from_index(i), n))
    }

    pub fn entry_count(&self) -> usize {
        self.entries.len()
    }

    /// All entries in document order.
    pub fn entries(&self) -> impl Iterator<Item = (Reference, &Entry)> + '_ {
        self.entries.iter().enumerate().map(move |(i, e)| (self.reference(i as u32), e))
    }

    pub fn entry(&self, r: Reference) -> Result<&Entry, TaxonomyError> {
        if r.owner != self.owner {
            return Err(TaxonomyError::ForeignReference);
        }
        self.entries.get(r.entry_index()).ok_or(TaxonomyError::ForeignReference)
    }

    pub fn index(&self) -> &Index {
        &self.index
    }

    /// References whose normalized text equals `normalize(word)`, in document order.
    pub fn references(&self, word: &str) -> Vec<Reference> {
        self.references_for_key(&normalize(word))
    }

    /// Like [`Thesaurus::references`] but `key` must already be normalized.
    pub fn references_for_key(&self, key: &str) -> Vec<Reference> {
        self.index.get(key).iter().map(|&e| self.reference(e)).collect()
    }

    pub fn contains(&self, word: &str) -> bool {
        !self.index.get(&normalize(word)).is_empty()
    }

    /// Entries of one semicolon group in order.
    pub fn group_entries(&self, group: NodeId) -> Result<Vec<Reference>, TaxonomyError> {
        let node = self.group_node(group)?;
        Ok(node.entries.clone().map(|e| self.reference(e)).collect())
    }

    pub fn ancestor_at(&self, node: NodeId, level: Level) -> Option<NodeId> {
        let n = self.nodes.get(node.index())?;
        (level <= n.level).then(|| NodeId(self.ancestors[node.index()][level.depth()]))
    }

    /// Head number a node sits under, if any.
    pub fn head_number_of(&self, node: NodeId) -> Option<u32> {
        let head = self.ancestor_at(node, Level::Head)?;
        self.nodes[head.index()].head_number
    }

    pub fn head(&self, number: u32) -> Option<NodeId> {
        self.nodes().find(|(_, n)| n.head_number == Some(number)).map(|(id, _)| id)
    }

    /// Label as printed in paths: heads get their number (`698. Cunning`),
    /// POS paragraphs their code (`ADJ.`), the root is `T`.
    pub fn display_label(&self, node: NodeId) -> Result<String, TaxonomyError> {
        let n = self.node(node)?;
        Ok(match (n.level, n.head_number) {
            (Level::Head, Some(num)) if n.label.is_empty() => alloc::format!("{num}."),
            (Level::Head, Some(num)) => alloc::format!("{num}. {}", n.label),
            _ => n.label.clone(),
        })
    }

    /// Dictionary-style location of a reference, e.g. `cat 365 N.`: the
    /// paragraph keyword, head number and part of speech.
    pub fn reference_label(&self, r: Reference) -> Result<String, TaxonomyError> {
        let entry = self.entry(r)?;
        let paragraph = self.nodes[entry.group.index()].parent.expect("group has a parent");
        Ok(alloc::format!(
            "{} {} {}",
            self.nodes[paragraph.index()].label,
            entry.head_number,
            entry.pos
        ))
    }

    /// Deepest node that is an ancestor-or-self of both semicolon groups.
    pub fn lowest_common_ancestor(&self, a: NodeId, b: NodeId) -> Result<NodeId, TaxonomyError> {
        self.group_node(a)?;
        self.group_node(b)?;
        Ok(self.lca_unchecked(a, b))
    }

    pub fn reference_distance(&self, r1: Reference, r2: Reference) -> Result<Distance, TaxonomyError> {
        let a = self.entry(r1)?.group;
        let b = self.entry(r2)?.group;
        Ok(Distance::below(self.nodes[self.lca_unchecked(a, b).index()].level))
    }

    /// Distance between two entries given by document position. Callers
    /// guarantee both indices are in range.
    pub(crate) fn entry_distance(&self, e1: u32, e2: u32) -> Distance {
        let a = self.entries[e1 as usize].group;
        let b = self.entries[e2 as usize].group;
        Distance::below(self.nodes[self.lca_unchecked(a, b).index()].level)
    }

    pub(crate) fn reference(&self, entry: u32) -> Reference {
        Reference { owner: self.owner, entry }
    }

    /// The unique tree path between two references' semicolon groups.
    pub fn tree_path(&self, r1: Reference, r2: Reference) -> Result<TreePath, TaxonomyError> {
        let e1 = self.entry(r1)?;
        let e2 = self.entry(r2)?;
        let apex = self.lca_unchecked(e1.group, e2.group);
        let apex_depth = self.nodes[apex.index()].level.depth();

        let up = &self.ancestors[e1.group.index()];
        let down = &self.ancestors[e2.group.index()];
        let mut nodes: Vec<NodeId> = (apex_depth..=8).rev().map(|l| NodeId(up[l])).collect();
        nodes.extend((apex_depth + 1..=8).map(|l| NodeId(down[l])));

        let labels = nodes
            .iter()
            .map(|&n| self.display_label(n))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TreePath {
            start: r1,
            end: r2,
            start_text: e1.text.clone(),
            end_text: e2.text.clone(),
            apex: 8 - apex_depth,
            nodes,
            labels,
        })
    }

    fn group_node(&self, id: NodeId) -> Result<&Node, TaxonomyError> {
        let node = self.node(id)?;
        if node.level != Level::SemicolonGroup {
            return Err(TaxonomyError::NotASemicolonGroup { node: id, level: node.level });
        }
        Ok(node)
    }

    fn lca_unchecked(&self, a: NodeId, b: NodeId) -> NodeId {
        let (pa, pb) = (&self.ancestors[a.index()], &self.ancestors[b.index()]);
        let depth = (0..=8).rev().find(|&l| pa[l] == pb[l]).unwrap_or(0);
        NodeId(pa[depth])
    }
}

/// Path between two references: the first group, ancestors up to the
/// lowest common ancestor, then down to the second group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreePath {
    start: Reference,
    end: Reference,
    start_text: String,
    end_text: String,
    nodes: Vec<NodeId>,
    labels: Vec<String>,
    apex: usize,
}

impl TreePath {
    pub fn start(&self) -> Reference {
        self.start
    }

    pub fn end(&self) -> Reference {
        self.end
    }

    /// Group of the start, every node in between, group of the end.
    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn apex(&self) -> NodeId {
        self.nodes[self.apex]
    }

    pub fn edges(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn distance(&self) -> Distance {
        Distance(self.edges() as u8)
    }
}

/// Arrow notation: `feline → cat ← lynx`. The words stand in for their
/// semicolon groups, so the number of arrows equals the distance. Two
/// entries of the same group print as `a ; b`.
impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges() == 0 {
            return write!(f, "{} ; {}", self.start_text, self.end_text);
        }
        f.write_str(&self.start_text)?;
        for label in &self.labels[1..=self.apex] {
            write!(f, " → {label}")?;
        }
        for label in &self.labels[self.apex + 1..self.labels.len() - 1] {
            write!(f, " ← {label}")?;
        }
        write!(f, " ← {}", self.end_text)
    }
}

/// Incremental, validating constructor for [`Thesaurus`].
///
/// Each call opens a node under the most recently opened node one level up,
/// closing everything deeper, like the records of the interchange format.
#[derive(Debug)]
pub struct ThesaurusBuilder {
    nodes: Vec<Node>,
    entries: Vec<Entry>,
    open: [Option<NodeId>; 9],
    heads: BTreeSet<u32>,
}

impl Default for ThesaurusBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl ThesaurusBuilder {
    pub fn new() -> Self {
        let root = Node {
            level: Level::Root,
            label: "T".to_string(),
            ordinal: 1,
            parent: None,
            children: Vec::new(),
            head_number: None,
            pos: None,
            entries: 0..0,
        };
        let mut open = [None; 9];
        open[0] = Some(NodeId(0));
        ThesaurusBuilder { nodes: alloc::vec![root], entries: Vec::new(), open, heads: BTreeSet::new() }
    }

    pub fn class(&mut self, ordinal: u32, label: &str) -> Result<NodeId, BuildError> {
        self.push(Level::Class, Some(ordinal), label, None, None)
    }

    pub fn section(&mut self, ordinal: u32, label: &str) -> Result<NodeId, BuildError> {
        self.push(Level::Section, Some(ordinal), label, None, None)
    }

    pub fn sub_section(&mut self, ordinal: u32, label: &str) -> Result<NodeId, BuildError> {
        self.push(Level::SubSection, Some(ordinal), label, None, None)
    }

    pub fn head_group(&mut self, ordinal: u32, label: &str) -> Result<NodeId, BuildError> {
        self.push(Level::HeadGroup, Some(ordinal), label, None, None)
    }

    pub fn head(&mut self, number: u32, label: &str) -> Result<NodeId, BuildError> {
        self.require_parent(Level::Head)?;
        if number == 0 {
            return Err(BuildError::ZeroHeadNumber);
        }
        if self.heads.contains(&number) {
            return Err(BuildError::DuplicateHead(number));
        }
        let id = self.push(Level::Head, None, label, Some(number), None)?;
        self.heads.insert(number);
        Ok(id)
    }

    pub fn pos_paragraph(&mut self, pos: Pos) -> Result<NodeId, BuildError> {
        let label = alloc::format!("{pos}");
        self.push(Level::PosParagraph, None, &label, None, Some(pos))
    }

    /// Without a label the paragraph is named after its first entry.
    pub fn paragraph(&mut self, ordinal: u32, label: Option<&str>) -> Result<NodeId, BuildError> {
        self.push(Level::Paragraph, Some(ordinal), label.unwrap_or(""), None, None)
    }

    pub fn semicolon_group<I, S>(&mut self, entries: I) -> Result<NodeId, BuildError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let paragraph = self.require_parent(Level::SemicolonGroup)?;
        let texts: Vec<String> = entries.into_iter().map(|s| s.as_ref().trim().to_string()).collect();
        if texts.is_empty() {
            return Err(BuildError::EmptyGroup);
        }
        if texts.iter().any(String::is_empty) {
            return Err(BuildError::EmptyEntry);
        }
        if let Some(t) = texts.iter().find(|t| t.contains('|')) {
            return Err(BuildError::PipeInEntry(t.clone()));
        }

        let pos_node = self.open[Level::PosParagraph.depth()].expect("paragraph implies POS block");
        let head_node = self.open[Level::Head.depth()].expect("paragraph implies head");
        let pos = self.nodes[pos_node.index()].pos.expect("POS paragraph has a POS");
        let head_number = self.nodes[head_node.index()].head_number.expect("head has a number");

        if self.nodes[paragraph.index()].label.is_empty() {
            self.nodes[paragraph.index()].label = texts[0].clone();
        }
        let group = self.push(Level::SemicolonGroup, None, "", None, None)?;
        let start = self.entries.len() as u32;
        for text in texts {
            self.entries.push(Entry { text, group, pos, head_number });
        }
        self.nodes[group.index()].entries = start..self.entries.len() as u32;
        Ok(group)
    }

    pub fn finish(self) -> Thesaurus {
        let mut ancestors = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            // Parents always precede their children.
            let mut row = match node.parent {
                Some(p) => ancestors[p.index()],
                None => [u32::MAX; 9],
            };
            row[node.level.depth()] = ancestors.len() as u32;
            ancestors.push(row);
        }
        let mut thesaurus = Thesaurus {
            owner: NEXT_OWNER.fetch_add(1, Ordering::Relaxed),
            nodes: self.nodes,
            ancestors,
            entries: self.entries,
            index: Index::default(),
        };
        thesaurus.index = Index::build(&thesaurus);
        thesaurus
    }

    fn require_parent(&self, level: Level) -> Result<NodeId, BuildError> {
        let parent = level.parent().expect("root is never opened");
        self.open[parent.depth()].ok_or(BuildError::MissingParent { level, parent })
    }

    fn push(
        &mut self,
        level: Level,
        ordinal: Option<u32>,
        label: &str,
        head_number: Option<u32>,
        pos: Option<Pos>,
    ) -> Result<NodeId, BuildError> {
        let parent = self.require_parent(level)?;
        let id = NodeId(self.nodes.len() as u32);
        let siblings = &mut self.nodes[parent.index()].children;
        siblings.push(id);
        let ordinal = ordinal.unwrap_or(siblings.len() as u32);
        self.nodes.push(Node {
            level,
            label: label.trim().to_string(),
            ordinal,
            parent: Some(parent),
            children: Vec::new(),
            head_number,
            pos,
            entries: 0..0,
        });
        self.open[level.depth()] = Some(id);
        for slot in &mut self.open[level.depth() + 1..] {
            *slot = None;
        }
        Ok(id)
    }
}
