//! File formats, the 1911 importer and the `roget` command line on top of
//! [`roget_core`].

pub mod cli;
pub mod files;
pub mod gutenberg;
pub mod report;

pub use files::{load_pairs, load_questions, load_thesaurus, parse_pairs, parse_questions, FileError, FormatError, PairFile};
pub use gutenberg::{convert_1911, ConversionReport, ImportError};
