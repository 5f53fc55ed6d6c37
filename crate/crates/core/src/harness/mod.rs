//! Exhaustive verification over small-graph corpora.

pub mod checks;
pub mod report;

pub use checks::{parse_checks, Check, Outcome, Status};
pub use report::{run_corpus, CheckReport, Corpus, CorpusDescriptor, Tally};
