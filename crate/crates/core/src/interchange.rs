//! Line-oriented interchange format.
//!
//! ```text
//! # comment
//! C <ordinal> <label>        class
//! S <ordinal> <label>        section
//! U <ordinal> <label>        sub-section
//! G <ordinal> <label>        head group
//! H <head-number> <label>    head
//! P <N|ADJ|VB|ADV>           part-of-speech block
//! Q <ordinal> [<label>]      paragraph
//! ; <entry> | <entry> | ...  semicolon group
//! ```
//!
//! Each record attaches to the most recent record one level up. Parsing is
//! strict: the first violation aborts with its line and column.

use alloc::string::{String, ToString};
use core::fmt::Write;

use thiserror::Error;

use crate::taxonomy::{BuildError, Level, Pos, Thesaurus, ThesaurusBuilder};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown record type {0:?}")]
    UnknownRecord(String),
    #[error("missing ordinal")]
    MissingNumber,
    #[error("invalid number {0:?}")]
    InvalidNumber(String),
    #[error("unknown part of speech {0:?}, expected N, ADJ, VB or ADV")]
    UnknownPos(String),
    #[error("keyword must be followed by a single space")]
    MissingSpace,
    #[error(transparent)]
    Structure(#[from] BuildError),
}

pub fn parse_interchange(text: &str) -> Result<Thesaurus, ParseError> {
    let mut builder = ThesaurusBuilder::new();
    for (number, raw) in text.lines().enumerate() {
        let line = number + 1;
        let indent = raw.len() - raw.trim_start().len();
        let record = raw.trim();
        if record.is_empty() || record.starts_with('#') {
            continue;
        }
        let at = |column: usize, kind: ParseErrorKind| ParseError { line, column: indent + column, kind };

        let (keyword, payload) = match record.split_once(' ') {
            Some((k, p)) => (k, p),
            None => (record, ""),
        };
        let payload_col = keyword.len() + 2;
        if payload.starts_with(' ') {
            return Err(at(keyword.len() + 1, ParseErrorKind::MissingSpace));
        }
        let structural = |e: BuildError| at(1, e.into());

        match keyword {
            "C" | "S" | "U" | "G" | "H" => {
                let (num, label) = split_number(payload).map_err(|k| at(payload_col, k))?;
                let result = match keyword {
                    "C" => builder.class(num, label),
                    "S" => builder.section(num, label),
                    "U" => builder.sub_section(num, label),
                    "G" => builder.head_group(num, label),
                    _ => builder.head(num, label),
                };
                result.map_err(|e| match e {
                    BuildError::ZeroHeadNumber | BuildError::DuplicateHead(_) => at(payload_col, e.into()),
                    e => structural(e),
                })?;
            }
            "P" => {
                let pos = Pos::from_code(payload)
                    .ok_or_else(|| at(payload_col, ParseErrorKind::UnknownPos(payload.to_string())))?;
                builder.pos_paragraph(pos).map_err(structural)?;
            }
            "Q" => {
                let (num, label) = split_number(payload).map_err(|k| at(payload_col, k))?;
                let label = (!label.is_empty()).then_some(label);
                builder.paragraph(num, label).map_err(structural)?;
            }
            ";" => {
                let entries = payload.split('|').map(str::trim);
                let group = if payload.trim().is_empty() {
                    builder.semicolon_group(core::iter::empty::<&str>())
                } else {
                    builder.semicolon_group(entries)
                };
                group.map_err(|e| match e {
                    BuildError::EmptyEntry => at(payload_col + empty_entry_offset(payload), e.into()),
                    e => structural(e),
                })?;
            }
            other => return Err(at(1, ParseErrorKind::UnknownRecord(other.to_string()))),
        }
    }
    Ok(builder.finish())
}

fn split_number(payload: &str) -> Result<(u32, &str), ParseErrorKind> {
    let (num, label) = payload.split_once(' ').unwrap_or((payload, ""));
    if num.is_empty() {
        return Err(ParseErrorKind::MissingNumber);
    }
    let num = num.parse().map_err(|_| ParseErrorKind::InvalidNumber(num.to_string()))?;
    Ok((num, label.trim()))
}

fn empty_entry_offset(payload: &str) -> usize {
    let mut offset = 0;
    for part in payload.split('|') {
        if part.trim().is_empty() {
            return offset;
        }
        offset += part.len() + 1;
    }
    0
}

/// Writes a thesaurus back out. Parsing the result yields an equal thesaurus.
pub fn to_interchange(thesaurus: &Thesaurus) -> String {
    let mut out = String::new();
    let mut stack = alloc::vec![thesaurus.root()];
    while let Some(id) = stack.pop() {
        let node = thesaurus.node(id).expect("ids come from the tree");
        let label = node.label();
        let _ = match node.level() {
            Level::Root => Ok(()),
            Level::Class => record(&mut out, "C", node.ordinal(), label),
            Level::Section => record(&mut out, "S", node.ordinal(), label),
            Level::SubSection => record(&mut out, "U", node.ordinal(), label),
            Level::HeadGroup => record(&mut out, "G", node.ordinal(), label),
            Level::Head => record(&mut out, "H", node.head_number().unwrap_or(0), label),
            Level::PosParagraph => writeln!(out, "P {}", node.pos().map_or("", Pos::code)),
            Level::Paragraph => record(&mut out, "Q", node.ordinal(), label),
            Level::SemicolonGroup => {
                out.push(';');
                let refs = thesaurus.group_entries(id).expect("node is a group");
                for (i, r) in refs.into_iter().enumerate() {
                    out.push_str(if i == 0 { " " } else { " | " });
                    out.push_str(thesaurus.entry(r).expect("own reference").text());
                }
                out.push('\n');
                Ok(())
            }
        };
        stack.extend(node.children().iter().rev());
    }
    out
}

fn record(out: &mut String, keyword: &str, number: u32, label: &str) -> core::fmt::Result {
    if label.is_empty() {
        writeln!(out, "{keyword} {number}")
    } else {
        writeln!(out, "{keyword} {number} {label}")
    }
}
