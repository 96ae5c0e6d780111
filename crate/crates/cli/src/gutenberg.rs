//! Converter from the Project Gutenberg plain text of the 1911 edition to
//! the interchange format.
//!
//! The 1911 text has classes, sections, numbered sub-section headings and
//! numbered heads, but no head groups: one head group is synthesized per
//! sub-section. Paragraphs start on indented lines and carry a part-of-speech
//! marker (`N.`, `V.`, `Adj.`, `Adv.`). Phrase and interjection paragraphs,
//! cross-references and entries with digits are dropped and counted.

use std::fmt;

use roget_core::{to_interchange, BuildError, Pos, ThesaurusBuilder};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ImportError {
    #[error("input is empty")]
    Empty,
    #[error("no class header (\"CLASS I\") found")]
    NoClasses,
    #[error("no head with usable entries found")]
    NoHeads,
    #[error("building the tree failed: {0}")]
    Build(#[from] BuildError),
}

/// Counts of what the conversion kept and what it skipped.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConversionReport {
    pub classes: usize,
    pub sections: usize,
    pub sub_sections: usize,
    pub heads: usize,
    pub paragraphs: usize,
    pub entries: usize,
    /// Lines outside any head that matched no known pattern.
    pub skipped_lines: usize,
    /// Heads outside a class, with a duplicate number or without entries.
    pub skipped_heads: usize,
    /// Phrase, interjection and unmarked paragraphs, and paragraphs left empty.
    pub skipped_paragraphs: usize,
    /// Cross-references and entries containing digits.
    pub dropped_entries: usize,
}

impl ConversionReport {
    pub fn skipped(&self) -> usize {
        self.skipped_lines + self.skipped_heads + self.skipped_paragraphs + self.dropped_entries
    }
}

impl fmt::Display for ConversionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "kept: {} classes, {} sections, {} sub-sections, {} heads, {} paragraphs, {} entries",
            self.classes, self.sections, self.sub_sections, self.heads, self.paragraphs, self.entries
        )?;
        write!(
            f,
            "skipped: {} lines, {} heads, {} paragraphs, {} entries",
            self.skipped_lines, self.skipped_heads, self.skipped_paragraphs, self.dropped_entries
        )
    }
}

#[derive(Debug, Default)]
struct Class {
    ordinal: u32,
    label: String,
    sections: Vec<Section>,
}

#[derive(Debug, Default)]
struct Section {
    ordinal: u32,
    label: String,
    subs: Vec<SubSection>,
}

#[derive(Debug, Default)]
struct SubSection {
    ordinal: u32,
    label: String,
    heads: Vec<Head>,
}

#[derive(Debug)]
struct Head {
    number: u32,
    label: String,
    blocks: Vec<(Pos, Vec<Vec<Vec<String>>>)>,
}

/// POS marker state of the paragraph being read.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Marker {
    Kept(Pos),
    Skipped,
}

const MARKERS: [(&str, Marker); 11] = [
    ("N.", Marker::Kept(Pos::Noun)),
    ("V.", Marker::Kept(Pos::Verb)),
    ("Adj.", Marker::Kept(Pos::Adjective)),
    ("Adv.", Marker::Kept(Pos::Adverb)),
    ("Phr.", Marker::Skipped),
    ("Int.", Marker::Skipped),
    ("Prep.", Marker::Skipped),
    ("Conj.", Marker::Skipped),
    ("Pron.", Marker::Skipped),
    ("Interj.", Marker::Skipped),
    ("Phrase.", Marker::Skipped),
];

#[derive(Default)]
struct Importer {
    classes: Vec<Class>,
    report: ConversionReport,
    seen_heads: std::collections::BTreeSet<u32>,
    // Set while inside a head; `false` means the head is being skipped.
    in_head: Option<bool>,
    marker: Option<Marker>,
    paragraph: Option<String>,
    awaiting_class_title: bool,
    // Set once the licence trailer starts.
    finished: bool,
}

impl Importer {
    fn line(&mut self, raw: &str) {
        let raw = raw.trim_end();
        let t = raw.trim();
        if t.is_empty() {
            self.flush();
            return;
        }
        if self.finished || t.starts_with("*** END") || t.starts_with("End of the Project Gutenberg") || t.starts_with("End of Project Gutenberg") {
            self.flush();
            self.in_head = None;
            self.finished = true;
            self.report.skipped_lines += 1;
            return;
        }
        if let Some(rest) = t.strip_prefix("CLASS ") {
            self.flush();
            self.in_head = None;
            let (roman, title) = split_numeral(rest);
            let ordinal = roman_value(roman).unwrap_or(self.classes.len() as u32 + 1);
            self.classes.push(Class { ordinal, label: class_label(roman, title), sections: Vec::new() });
            self.awaiting_class_title = title.is_empty();
            return;
        }
        if let Some(rest) = t.strip_prefix("SECTION ") {
            self.flush();
            self.in_head = None;
            self.awaiting_class_title = false;
            let (roman, title) = split_numeral(rest);
            let Some(class) = self.classes.last_mut() else {
                self.report.skipped_lines += 1;
                return;
            };
            let ordinal = roman_value(roman).unwrap_or(class.sections.len() as u32 + 1);
            class.sections.push(Section { ordinal, label: section_label(roman, title), subs: Vec::new() });
            return;
        }
        if let Some((number, label, rest)) = head_line(t) {
            self.flush();
            self.awaiting_class_title = false;
            self.start_head(number, label);
            self.marker = None;
            if !rest.is_empty() {
                self.start_paragraph(rest);
            }
            return;
        }
        if let Some((ordinal, title)) = sub_section_line(t) {
            self.flush();
            self.in_head = None;
            self.awaiting_class_title = false;
            match self.classes.last_mut().and_then(|c| c.sections.last_mut()) {
                Some(section) => section.subs.push(SubSection { ordinal, label: title.to_string(), heads: Vec::new() }),
                None => self.report.skipped_lines += 1,
            }
            return;
        }
        match self.in_head {
            Some(_) if raw.starts_with([' ', '\t']) => {
                self.flush();
                self.start_paragraph(t);
            }
            Some(_) => match &mut self.paragraph {
                Some(p) => {
                    p.push(' ');
                    p.push_str(t);
                }
                None => self.start_paragraph(t),
            },
            None if self.awaiting_class_title && is_upper_title(t) => {
                if let Some(class) = self.classes.last_mut() {
                    class.label.push_str(t);
                }
                self.awaiting_class_title = false;
            }
            None => self.report.skipped_lines += 1,
        }
    }

    fn start_head(&mut self, number: u32, label: &str) {
        let section = self.classes.last_mut().and_then(|c| c.sections.last_mut());
        let Some(section) = section else {
            self.report.skipped_heads += 1;
            self.in_head = Some(false);
            return;
        };
        if number == 0 || !self.seen_heads.insert(number) {
            self.report.skipped_heads += 1;
            self.in_head = Some(false);
            return;
        }
        if section.subs.is_empty() {
            section.subs.push(SubSection { ordinal: 1, label: section.label.clone(), heads: Vec::new() });
        }
        let sub = section.subs.last_mut().expect("just ensured");
        sub.heads.push(Head { number, label: label.to_string(), blocks: Vec::new() });
        self.in_head = Some(true);
    }

    fn start_paragraph(&mut self, text: &str) {
        let mut text = text;
        for (code, marker) in MARKERS {
            if let Some(rest) = text.strip_prefix(code) {
                if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                    self.marker = Some(marker);
                    text = rest.trim_start();
                    break;
                }
            }
        }
        self.paragraph = Some(text.to_string());
    }

    fn flush(&mut self) {
        let Some(text) = self.paragraph.take() else { return };
        if self.in_head != Some(true) {
            return;
        }
        let Some(Marker::Kept(pos)) = self.marker else {
            self.report.skipped_paragraphs += 1;
            return;
        };
        let groups = clean_paragraph(&text, &mut self.report.dropped_entries);
        if groups.is_empty() {
            self.report.skipped_paragraphs += 1;
            return;
        }
        let head = self
            .classes
            .last_mut()
            .and_then(|c| c.sections.last_mut())
            .and_then(|s| s.subs.last_mut())
            .and_then(|u| u.heads.last_mut())
            .expect("a kept head is open");
        match head.blocks.last_mut() {
            Some((p, paragraphs)) if *p == pos => paragraphs.push(groups),
            _ => head.blocks.push((pos, vec![groups])),
        }
    }

    fn build(mut self) -> Result<(String, ConversionReport), ImportError> {
        self.flush();
        if self.classes.is_empty() {
            return Err(ImportError::NoClasses);
        }
        let mut b = ThesaurusBuilder::new();
        let report = &mut self.report;
        for class in &self.classes {
            let mut class_open = false;
            for section in &class.sections {
                let mut section_open = false;
                for sub in &section.subs {
                    let mut sub_open = false;
                    for head in &sub.heads {
                        if head.blocks.is_empty() {
                            report.skipped_heads += 1;
                            continue;
                        }
                        if !class_open {
                            b.class(class.ordinal, class.label.trim_end_matches([' ', ':']))?;
                            report.classes += 1;
                            class_open = true;
                        }
                        if !section_open {
                            b.section(section.ordinal, &section.label)?;
                            report.sections += 1;
                            section_open = true;
                        }
                        if !sub_open {
                            b.sub_section(sub.ordinal, &sub.label)?;
                            b.head_group(1, &head_group_label(sub))?;
                            report.sub_sections += 1;
                            sub_open = true;
                        }
                        b.head(head.number, &head.label)?;
                        report.heads += 1;
                        for (pos, paragraphs) in &head.blocks {
                            b.pos_paragraph(*pos)?;
                            for (i, groups) in paragraphs.iter().enumerate() {
                                b.paragraph(i as u32 + 1, None)?;
                                report.paragraphs += 1;
                                for group in groups {
                                    b.semicolon_group(group)?;
                                    report.entries += group.len();
                                }
                            }
                        }
                    }
                }
            }
        }
        if report.heads == 0 {
            return Err(ImportError::NoHeads);
        }
        Ok((to_interchange(&b.finish()), self.report))
    }
}

/// Converts the 1911 plain text into an interchange document.
pub fn convert_1911(text: &str) -> Result<(String, ConversionReport), ImportError> {
    if text.trim().is_empty() {
        return Err(ImportError::Empty);
    }
    let mut importer = Importer::default();
    for line in text.lines() {
        importer.line(line);
    }
    importer.build()
}

fn head_group_label(sub: &SubSection) -> String {
    let numbers: Vec<String> =
        sub.heads.iter().filter(|h| !h.blocks.is_empty()).map(|h| h.number.to_string()).collect();
    format!("[{}]", numbers.join(", "))
}

/// Splits `"IV. FORMATION OF IDEAS"` into the numeral and the title.
fn split_numeral(rest: &str) -> (&str, &str) {
    let rest = rest.trim();
    let end = rest.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(rest.len());
    let (numeral, title) = rest.split_at(end);
    (numeral, title.trim_start_matches(['.', ' ']).trim())
}

fn class_label(roman: &str, title: &str) -> String {
    format!("Class {roman} : {title}")
}

fn section_label(roman: &str, title: &str) -> String {
    format!("Section {roman} : {title}").trim_end_matches([' ', ':']).to_string()
}

fn roman_value(s: &str) -> Option<u32> {
    if s.is_empty() {
        return None;
    }
    let digit = |c| match c {
        'I' => Some(1),
        'V' => Some(5),
        'X' => Some(10),
        'L' => Some(50),
        'C' => Some(100),
        _ => None,
    };
    let values: Vec<u32> = s.chars().map(digit).collect::<Option<_>>()?;
    let mut total = 0;
    for (i, &v) in values.iter().enumerate() {
        match values.get(i + 1) {
            Some(&next) if next > v => total -= v as i64,
            _ => total += v as i64,
        }
    }
    u32::try_from(total).ok().filter(|&v| v > 0)
}

/// `#1. Existence. -- N. existence, being, ...` gives
/// `(1, "Existence", "N. existence, being, ...")`. Numbers with a letter
/// suffix (`#1a.`) are variant heads and come back with number 0.
fn head_line(t: &str) -> Option<(u32, &str, &str)> {
    let body = t.strip_prefix('#').unwrap_or(t);
    let digits = body.find(|c: char| !c.is_ascii_digit())?;
    if digits == 0 {
        return None;
    }
    let number: u32 = body[..digits].parse().ok()?;
    let after = &body[digits..];
    let (number, after) = match after.chars().next()? {
        c if c.is_ascii_lowercase() => (0, &after[1..]),
        _ => (number, after),
    };
    let after = after.strip_prefix('.')?;
    let (label, rest) = after.split_once("--")?;
    let label = label.trim().trim_end_matches(['.', ',']).trim();
    if label.is_empty() {
        return None;
    }
    Some((number, label, rest.trim()))
}

/// `2. NUMBER` style sub-section headings: a number and an uppercase title.
fn sub_section_line(t: &str) -> Option<(u32, &str)> {
    let (number, title) = t.split_once(". ")?;
    let ordinal = number.parse().ok()?;
    let title = title.trim();
    is_upper_title(title).then_some((ordinal, title))
}

fn is_upper_title(t: &str) -> bool {
    t.chars().any(|c| c.is_alphabetic()) && !t.chars().any(|c| c.is_lowercase()) && !t.contains("--")
}

/// Splits a paragraph into semicolon groups of comma-separated entries,
/// removing bracketed and parenthesized asides first.
fn clean_paragraph(text: &str, dropped: &mut usize) -> Vec<Vec<String>> {
    let mut plain = String::with_capacity(text.len());
    let mut depth = 0usize;
    for c in text.chars() {
        match c {
            '[' | '(' | '{' => depth += 1,
            ']' | ')' | '}' => depth = depth.saturating_sub(1),
            _ if depth == 0 => plain.push(c),
            _ => {}
        }
    }
    plain
        .split(';')
        .map(|group| {
            group
                .split(',')
                .filter_map(|entry| {
                    let entry = entry.replace(['"', '*', '|'], "");
                    let entry = entry.split_whitespace().collect::<Vec<_>>().join(" ");
                    let entry = entry.trim_end_matches(['.', ':']).trim();
                    if entry.is_empty() {
                        return None;
                    }
                    if entry.contains("&c") || entry.chars().any(|c| c.is_ascii_digit()) {
                        *dropped += 1;
                        return None;
                    }
                    Some(entry.to_string())
                })
                .collect::<Vec<_>>()
        })
        .filter(|g| !g.is_empty())
        .collect()
}
