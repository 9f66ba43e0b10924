use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::corpus::{enumerate_corpus, CorpusEntry, CorpusSpec};
use super::verify::{verify_graph, Check, CheckResult, GraphReport, VerifyOptions};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    pub verify: VerifyOptions,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub pass: usize,
    pub fail: usize,
}

/// Final line of a report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    /// Graphs with at least one failed check.
    pub failed: usize,
    pub by_check: BTreeMap<String, CheckTally>,
}

impl Summary {
    fn record(&mut self, report: &GraphReport) {
        self.total += 1;
        if !report.passed() {
            self.failed += 1;
        }
        for (name, r) in &report.checks {
            let t = self.by_check.entry(name.clone()).or_default();
            if r.pass {
                t.pass += 1;
            } else {
                t.fail += 1;
            }
        }
    }
}

fn parse_failure_report(line: usize, text: &str, error: &str) -> GraphReport {
    GraphReport {
        graph6: text.to_string(),
        n: 0,
        m: 0,
        checks: vec![(
            "parse".to_string(),
            CheckResult {
                pass: false,
                witness: Some(format!("line {line}: {error}")),
                ms: 0,
            },
        )],
    }
}

const CHUNK: usize = 256;

/// Verifies every corpus graph, writing one JSON record per graph in corpus
/// order followed by the summary line.
pub fn run_corpus<W: Write>(spec: &CorpusSpec, checks: &[Check], opts: &RunOptions, out: &mut W) -> Result<Summary> {
    let entries = enumerate_corpus(spec)?;
    run_entries(&entries, checks, opts, out)
}

/// As [`run_corpus`] over already materialized entries.
pub fn run_entries<W: Write>(
    entries: &[CorpusEntry],
    checks: &[Check],
    opts: &RunOptions,
    out: &mut W,
) -> Result<Summary> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;
    let io = |e: std::io::Error| Error::Io(format!("report output: {e}"));
    let mut summary = Summary::default();
    for chunk in entries.chunks(CHUNK) {
        // indexed parallel collect keeps corpus order
        let reports: Vec<GraphReport> = pool.install(|| {
            chunk
                .par_iter()
                .map(|entry| match entry {
                    Ok(g) => verify_graph(g, checks, &opts.verify),
                    Err(f) => parse_failure_report(f.line, &f.text, &f.error),
                })
                .collect()
        });
        for r in &reports {
            summary.record(r);
            writeln!(out, "{}", r.to_json_line()).map_err(io)?;
        }
    }
    writeln!(out, "{}", serde_json::to_string(&summary).expect("summary serializes")).map_err(io)?;
    Ok(summary)
}
