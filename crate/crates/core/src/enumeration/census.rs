use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use super::pool;
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, serialize_graph6, Graph};
use crate::index::{curvature_index, IndexValue};

const CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MalformedLine {
    pub line: usize,
    pub error: String,
}

/// Outcome of an index census over a list of graphs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    /// Common order of the graphs, `None` when orders differ or no graph
    /// was read.
    pub n: Option<usize>,
    pub total_connected: usize,
    pub dx_count: usize,
    /// graph6 strings of the distance exceptional graphs, in input order.
    pub dx_examples: Vec<String>,
    pub index_histogram: BTreeMap<IndexValue, usize>,
    pub disconnected_skipped: usize,
    pub malformed_skipped: usize,
    pub malformed: Vec<MalformedLine>,
    #[serde(skip)]
    mixed_orders: bool,
}

enum Outcome {
    Indexed {
        n: usize,
        graph6: String,
        index: IndexValue,
    },
    Disconnected {
        n: usize,
    },
    Malformed(String),
}

fn classify(g: &Graph) -> Outcome {
    match curvature_index(g) {
        Ok((index, _)) => Outcome::Indexed {
            n: g.n(),
            graph6: serialize_graph6(g),
            index,
        },
        Err(Error::Disconnected) => Outcome::Disconnected { n: g.n() },
        Err(e) => Outcome::Malformed(e.to_string()),
    }
}

impl CensusReport {
    fn note_order(&mut self, n: usize) {
        match self.n {
            _ if self.mixed_orders => {}
            None if self.total_connected + self.disconnected_skipped == 0 => self.n = Some(n),
            Some(m) if m == n => {}
            _ => {
                self.n = None;
                self.mixed_orders = true;
            }
        }
    }

    fn absorb(&mut self, line: usize, outcome: Outcome) {
        match outcome {
            Outcome::Indexed { n, graph6, index } => {
                self.note_order(n);
                self.total_connected += 1;
                if index.is_zero() {
                    self.dx_count += 1;
                    self.dx_examples.push(graph6);
                }
                *self.index_histogram.entry(index).or_default() += 1;
            }
            Outcome::Disconnected { n } => {
                self.note_order(n);
                self.disconnected_skipped += 1;
            }
            Outcome::Malformed(error) => {
                self.malformed_skipped += 1;
                self.malformed.push(MalformedLine { line, error });
            }
        }
    }

    /// The histogram as `index,count` lines with a header.
    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("index,count\n");
        for (k, v) in &self.index_histogram {
            let _ = writeln!(out, "{k},{v}");
        }
        out
    }
}

/// Indexes every line of a graph6 stream. Lines are processed in chunks by
/// `jobs` workers and merged in input order, so the report does not depend
/// on `jobs`. Malformed lines are recorded (1-based line numbers) and
/// skipped; blank lines are ignored.
pub fn scan_graph6(input: impl BufRead, jobs: usize) -> Result<CensusReport> {
    let pool = pool(jobs)?;
    let mut report = CensusReport::default();
    let mut lines = input.lines().enumerate();
    loop {
        let mut chunk: Vec<(usize, String)> = Vec::with_capacity(CHUNK);
        for (i, line) in lines.by_ref() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            chunk.push((i + 1, line));
            if chunk.len() == CHUNK {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<Outcome> = pool.install(|| {
            chunk
                .par_iter()
                .map(|(_, line)| match parse_graph6(line) {
                    Ok(g) => classify(&g),
                    Err(e) => Outcome::Malformed(e.to_string()),
                })
                .collect()
        });
        for ((line, _), outcome) in chunk.iter().zip(outcomes) {
            report.absorb(*line, outcome);
        }
    }
    Ok(report)
}

/// The same report for graphs already in memory.
pub fn census(graphs: &[Graph], jobs: usize) -> Result<CensusReport> {
    let pool = pool(jobs)?;
    let outcomes: Vec<Outcome> = pool.install(|| graphs.par_iter().map(classify).collect());
    let mut report = CensusReport::default();
    for (i, o) in outcomes.into_iter().enumerate() {
        report.absorb(i + 1, o);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_skips() {
        let text = "A_\n\nB?\nBw\n@@@\nC~\n";
        let r = scan_graph6(text.as_bytes(), 2).unwrap();
        assert_eq!(r.total_connected, 3);
        assert_eq!(r.disconnected_skipped, 1);
        assert_eq!(r.malformed_skipped, 1);
        assert_eq!(r.malformed[0].line, 5);
        assert_eq!(r.n, None);
        assert_eq!(r.dx_count, 0);
        assert!(r.histogram_csv().starts_with("index,count\n"));
    }

    #[test]
    fn single_order_is_reported() {
        let r = scan_graph6("Bw\nBW\n".as_bytes(), 1).unwrap();
        assert_eq!(r.n, Some(3));
        assert_eq!(r.total_connected, 2);
    }

    #[test]
    fn zero_workers_rejected() {
        assert!(scan_graph6("A_\n".as_bytes(), 0).is_err());
    }
}
