//! Reading thesaurus, question and pair files.

use std::fs;
use std::path::{Path, PathBuf};

use roget_core::{parse_interchange, HumanScale, ParseError, ScoredPair, SynonymQuestion, Thesaurus};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Thesaurus { path: PathBuf, source: ParseError },
    #[error("{}: line {line}: {message}", path.display())]
    Format { path: PathBuf, line: usize, message: String },
}

/// Line-level error from one of the TSV formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl FormatError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        FormatError { line, message: message.into() }
    }

    fn at(self, path: &Path) -> FileError {
        FileError::Format { path: path.to_path_buf(), line: self.line, message: self.message }
    }
}

pub fn read_text(path: &Path) -> Result<String, FileError> {
    fs::read_to_string(path).map_err(|source| FileError::Io { path: path.to_path_buf(), source })
}

pub fn load_thesaurus(path: &Path) -> Result<Thesaurus, FileError> {
    let text = read_text(path)?;
    parse_interchange(&text).map_err(|source| FileError::Thesaurus { path: path.to_path_buf(), source })
}

pub fn load_questions(path: &Path) -> Result<Vec<SynonymQuestion>, FileError> {
    parse_questions(&read_text(path)?).map_err(|e| e.at(path))
}

pub fn load_pairs(path: &Path) -> Result<PairFile, FileError> {
    parse_pairs(&read_text(path)?).map_err(|e| e.at(path))
}

/// Non-blank, non-comment lines with their 1-based numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

/// `problem<TAB>choice1<TAB>choice2<TAB>choice3<TAB>choice4<TAB>gold[<TAB>source]`
pub fn parse_questions(text: &str) -> Result<Vec<SynonymQuestion>, FormatError> {
    records(text)
        .map(|(line, record)| {
            let fields: Vec<&str> = record.split('\t').map(str::trim).collect();
            if !(6..=7).contains(&fields.len()) {
                return Err(FormatError::new(
                    line,
                    format!("expected 6 or 7 tab-separated fields, found {}", fields.len()),
                ));
            }
            if let Some(i) = fields[..5].iter().position(|f| f.is_empty()) {
                return Err(FormatError::new(line, format!("field {} is empty", i + 1)));
            }
            let gold: usize = fields[5]
                .parse()
                .map_err(|_| FormatError::new(line, format!("invalid gold index {:?}", fields[5])))?;
            let q = SynonymQuestion::new(fields[0], [fields[1], fields[2], fields[3], fields[4]], gold)
                .map_err(|e| FormatError::new(line, e.to_string()))?;
            Ok(q.with_source(fields.get(6).copied().unwrap_or("")))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairFile {
    pub scale: HumanScale,
    pub pairs: Vec<ScoredPair>,
}

/// Header `scale<TAB>min<TAB>max`, then `word1<TAB>word2<TAB>score` rows.
pub fn parse_pairs(text: &str) -> Result<PairFile, FormatError> {
    let mut lines = records(text);
    let (line, header) = lines.next().ok_or_else(|| FormatError::new(1, "missing scale header"))?;
    let fields: Vec<&str> = header.split('\t').map(str::trim).collect();
    let number = |s: &str| -> Result<f64, FormatError> {
        s.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| FormatError::new(line, format!("invalid number {s:?}")))
    };
    let scale = match fields[..] {
        ["scale", min, max] => HumanScale { min: number(min)?, max: number(max)? },
        _ => return Err(FormatError::new(line, "expected header \"scale<TAB>min<TAB>max\"")),
    };
    if scale.min >= scale.max {
        return Err(FormatError::new(line, "scale minimum must be below its maximum"));
    }

    let pairs = lines
        .map(|(line, record)| {
            let fields: Vec<&str> = record.split('\t').map(str::trim).collect();
            let [w1, w2, score] = fields[..] else {
                return Err(FormatError::new(line, format!("expected 3 fields, found {}", fields.len())));
            };
            if w1.is_empty() || w2.is_empty() {
                return Err(FormatError::new(line, "empty word"));
            }
            let human: f64 = score
                .parse()
                .map_err(|_| FormatError::new(line, format!("invalid score {score:?}")))?;
            if !scale.contains(human) {
                return Err(FormatError::new(
                    line,
                    format!("score {human} outside scale {}-{}", scale.min, scale.max),
                ));
            }
            Ok(ScoredPair { word1: w1.to_string(), word2: w2.to_string(), human })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PairFile { scale, pairs })
}
