//! Command-line interface.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use roget_core::{
    evaluate_pairs, filter_noun_only, outlier_report, score_test, validate_structure, NotFoundPolicy, Thesaurus,
};

use crate::files::{load_pairs, load_questions, load_thesaurus, read_text, FileError};
use crate::gutenberg::convert_1911;
use crate::report::{self, Format};

/// Semantic distance and similarity over a Roget-style thesaurus.
#[derive(Debug, Parser)]
#[command(name = "roget", version)]
pub struct Cli {
    /// Thesaurus in the interchange format.
    #[arg(long, global = true, env = "ROGET_THESAURUS", value_name = "FILE")]
    thesaurus: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert a source text into the interchange format.
    Import {
        #[arg(long, value_enum, default_value_t = Source::Gutenberg1911)]
        from: Source,
        input: PathBuf,
        /// Write here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a thesaurus and print its level counts.
    Validate {
        /// Defaults to --thesaurus.
        file: Option<PathBuf>,
    },
    /// Shortest path length between two words.
    Distance { word1: String, word2: String },
    /// Similarity (16 minus the distance) between two words.
    Sim { word1: String, word2: String },
    /// Print every shortest (or longest) path between two words.
    Paths {
        word1: String,
        word2: String,
        #[arg(long)]
        longest: bool,
    },
    /// Answer a file of synonym questions.
    Solve {
        questions: PathBuf,
        /// Keep only questions whose words all have a noun reading.
        #[arg(long)]
        nouns_only: bool,
        /// Print only the summary.
        #[arg(long)]
        summary: bool,
    },
    /// Correlate thesaurus similarity with human ratings.
    Bench {
        pairs: PathBuf,
        #[arg(long, value_enum, default_value_t = Policy::Skip)]
        policy: Policy,
        /// List disagreements, splitting human scores at this value.
        #[arg(long, value_name = "THRESHOLD")]
        outliers: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Source {
    #[value(name = "gutenberg1911")]
    Gutenberg1911,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Policy {
    Skip,
    Zero,
}

/// Failure of one command, mapped onto the process exit code.
#[derive(Debug)]
enum Failure {
    /// Unreadable or malformed input (exit code 2).
    Input(String),
    /// A well-formed request with no answer, such as an unknown word (exit code 1).
    Domain(String),
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Runs the CLI and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "roget: {msg}");
            1
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "roget: {msg}");
            2
        }
    }
}

fn thesaurus(cli: &Cli) -> Result<Thesaurus, Failure> {
    let path = cli.thesaurus.as_deref().ok_or_else(|| {
        Failure::Input("no thesaurus given: pass --thesaurus FILE or set ROGET_THESAURUS".to_string())
    })?;
    Ok(load_thesaurus(path)?)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Input(format!("cannot write output: {e}")))
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Import { from: Source::Gutenberg1911, input, output } => {
            let text = read_text(input)?;
            let (doc, conversion) =
                convert_1911(&text).map_err(|e| Failure::Input(format!("{}: {e}", input.display())))?;
            match output {
                Some(path) => write_file(path, &doc)?,
                None => emit(out, &doc)?,
            }
            let _ = writeln!(err, "{conversion}");
        }
        Command::Validate { file } => {
            let t = match file {
                Some(path) => load_thesaurus(path)?,
                None => thesaurus(cli)?,
            };
            let report = validate_structure(&t);
            emit(out, &report::structure(&report, format))?;
            if !report.is_clean() {
                return Ok(1);
            }
        }
        Command::Distance { word1, word2 } | Command::Sim { word1, word2 } => {
            let t = thesaurus(cli)?;
            let found = t.word_min_distance(word1, word2).map_err(|e| Failure::Domain(e.to_string()))?;
            let similarity_first = matches!(cli.command, Command::Sim { .. });
            emit(out, &report::distance(word1, word2, &found, format, similarity_first))?;
        }
        Command::Paths { word1, word2, longest } => {
            let t = thesaurus(cli)?;
            let found = if *longest { t.word_max_distance(word1, word2) } else { t.word_min_distance(word1, word2) }
                .map_err(|e| Failure::Domain(e.to_string()))?;
            emit(out, &report::paths(&t, word1, word2, &found, format))?;
        }
        Command::Solve { questions, nouns_only, summary } => {
            let t = thesaurus(cli)?;
            let mut qs = load_questions(questions)?;
            if *nouns_only {
                let before = qs.len();
                qs = filter_noun_only(&t, &qs);
                let _ = writeln!(err, "kept {} of {before} questions with noun readings", qs.len());
            }
            let (results, test) = score_test(&t, &qs).map_err(|e| Failure::Domain(e.to_string()))?;
            if !summary {
                let mut text = String::new();
                for (i, (q, r)) in qs.iter().zip(&results).enumerate() {
                    text.push_str(&report::question(q, r, i + 1, format));
                    if format == Format::Text {
                        text.push('\n');
                    }
                }
                emit(out, &text)?;
            }
            emit(out, &report::test_summary(&test, format))?;
        }
        Command::Bench { pairs, policy, outliers } => {
            let t = thesaurus(cli)?;
            let file = load_pairs(pairs)?;
            let policy = match policy {
                Policy::Skip => NotFoundPolicy::Skip,
                Policy::Zero => NotFoundPolicy::Zero,
            };
            let result =
                evaluate_pairs(&t, &file.pairs, file.scale, policy).map_err(|e| Failure::Domain(e.to_string()))?;
            emit(out, &report::bench(&result, format))?;
            if result.not_found > 0 {
                let treatment = match policy {
                    NotFoundPolicy::Skip => "left out of the correlation",
                    NotFoundPolicy::Zero => "scored as 0",
                };
                let _ = writeln!(err, "{} pair(s) not found, {treatment}", result.not_found);
            }
            if let Some(threshold) = outliers {
                let found = outlier_report(&result, *threshold);
                emit(out, "\n")?;
                emit(out, &report::outliers(&found, format))?;
            }
        }
    }
    Ok(0)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}
