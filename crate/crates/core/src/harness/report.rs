//! Corpus runner and JSON/CSV reports.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::{Check, Outcome, Status, EXTREME_MAX_ORDER};
use crate::canon::{canonical_form, CANONICAL_MAX_ORDER};
use crate::convexity::ALIGNMENT_CAP;
use crate::enumerate::{enumerate_graphs, EnumerationCaps};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6_lines, write_graph6};
use crate::intervals::SUBSET_ENUMERATION_CAP;

/// Where a corpus came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "lowercase")]
pub enum CorpusDescriptor {
    Enumerated {
        n_min: usize,
        n_max: usize,
        connected: bool,
        dedup: bool,
    },
    Graph6 {
        path: String,
    },
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub descriptor: CorpusDescriptor,
    pub graphs: Vec<Graph>,
}

impl Corpus {
    /// Graphs on `n_min..=n_max` vertices from the built-in enumerator.
    pub fn enumerated(orders: RangeInclusive<usize>, connected: bool, dedup: bool) -> Result<Self> {
        let mut graphs = Vec::new();
        for n in orders.clone() {
            graphs.extend(enumerate_graphs(n, connected, dedup)?);
        }
        Ok(Corpus {
            descriptor: CorpusDescriptor::Enumerated {
                n_min: *orders.start(),
                n_max: *orders.end(),
                connected,
                dedup,
            },
            graphs,
        })
    }

    /// One graph per non-empty line of a graph6 file.
    pub fn from_graph6_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(Corpus {
            descriptor: CorpusDescriptor::Graph6 {
                path: path.display().to_string(),
            },
            graphs: parse_graph6_lines(&text)?,
        })
    }

    pub fn from_graphs(descriptor: CorpusDescriptor, graphs: Vec<Graph>) -> Self {
        Corpus { descriptor, graphs }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Tally {
    fn add(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Skipped => self.skipped += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphResult {
    pub graph6: String,
    pub outcomes: BTreeMap<String, Outcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub canonical_max_order: usize,
    pub dedup_max_order: usize,
    pub labeled_max_order: usize,
    pub alignment_max_order: usize,
    pub subset_enumeration_max_order: usize,
    pub extreme_max_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        let e = EnumerationCaps::default();
        Caps {
            canonical_max_order: CANONICAL_MAX_ORDER,
            dedup_max_order: e.dedup,
            labeled_max_order: e.labeled,
            alignment_max_order: ALIGNMENT_CAP,
            subset_enumeration_max_order: SUBSET_ENUMERATION_CAP,
            extreme_max_order: EXTREME_MAX_ORDER,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub corpus: CorpusDescriptor,
    pub checks: Vec<String>,
    pub caps: Caps,
}

/// Per-graph outcomes plus per-check tallies. Wall-clock time is kept out of
/// the serialised form so reports are byte-identical across runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub meta: Meta,
    pub results: Vec<GraphResult>,
    pub summary: BTreeMap<String, Tally>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn failures(&self) -> usize {
        self.summary.values().map(|t| t.fail).sum()
    }

    pub fn tally(&self, check: Check) -> Option<&Tally> {
        self.summary.get(check.name())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    /// Long format: one row per graph and check.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(["graph6", "check", "status", "note", "witness"])
            .map_err(io)?;
        for r in &self.results {
            for (name, o) in &r.outcomes {
                let status = serde_json::to_value(o.status).expect("status serialises");
                let witness = if o.witness.is_null() {
                    String::new()
                } else {
                    o.witness.to_string()
                };
                w.write_record([
                    r.graph6.as_str(),
                    name.as_str(),
                    status.as_str().unwrap_or_default(),
                    o.note.as_deref().unwrap_or(""),
                    witness.as_str(),
                ])
                .map_err(io)?;
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Ordering key: canonical form where available, else the graph6 string.
fn sort_key(g: &Graph) -> (usize, Vec<u8>) {
    let form = canonical_form(g).unwrap_or_else(|_| write_graph6(g).into_bytes());
    (g.order(), form)
}

/// Applies each check to each corpus graph on a pool of `jobs` threads.
/// The report does not depend on `jobs`.
pub fn run_corpus(corpus: &Corpus, checks: &[Check], jobs: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Usage(format!("cannot start {jobs} worker threads: {e}")))?;
    let mut rows: Vec<((usize, Vec<u8>), GraphResult)> = pool.install(|| {
        corpus
            .graphs
            .par_iter()
            .map(|g| {
                let outcomes = checks
                    .iter()
                    .map(|c| (c.name().to_string(), c.run(g)))
                    .collect();
                let row = GraphResult {
                    graph6: write_graph6(g),
                    outcomes,
                };
                (sort_key(g), row)
            })
            .collect()
    });
    rows.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.graph6.cmp(&b.1.graph6)));
    let results: Vec<GraphResult> = rows.into_iter().map(|(_, r)| r).collect();

    let mut summary: BTreeMap<String, Tally> = checks
        .iter()
        .map(|c| (c.name().to_string(), Tally::default()))
        .collect();
    for r in &results {
        for (name, o) in &r.outcomes {
            summary.get_mut(name).expect("check in summary").add(o.status);
        }
    }
    Ok(CheckReport {
        meta: Meta {
            corpus: corpus.descriptor.clone(),
            checks: checks.iter().map(|c| c.name().to_string()).collect(),
            caps: Caps::default(),
        },
        results,
        summary,
        elapsed: start.elapsed(),
    })
}
