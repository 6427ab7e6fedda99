//! Report assembly and batch running for the `recip` command.

pub mod commands;
pub mod document;

pub use commands::{cmd_analyze, cmd_corpus, corpus_table, read_corpus, AnalyzeOptions, CorpusRow, EXIT_ANALYSIS, EXIT_CORPUS_FAILURE, EXIT_INPUT, EXIT_OK};
pub use document::{AnalysisDocument, STATUS_OK};
