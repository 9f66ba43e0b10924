//! Exhaustive small-graph corpora, per-graph property checks and JSONL
//! reports.

mod corpus;
mod run;
mod verify;

pub use corpus::{
    connected_classes, enumerate_corpus, labeled_graphs, parse_corpus_text, CorpusEntry, CorpusSource, CorpusSpec,
    ParseFailure, GENERATED_MAX_N,
};
pub use run::{run_corpus, run_entries, CheckTally, RunOptions, Summary};
pub use verify::{verify_graph, Check, CheckResult, GraphReport, VerifyOptions};
