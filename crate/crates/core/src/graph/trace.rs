use serde::{Deserialize, Serialize};

use super::{add_pendant, cartesian_product, coalesce, join, parse_graph6, serialize_graph6, Graph};
use crate::error::{Error, Result};
use crate::index::IndexValue;

/// One recorded operation. Operand graphs travel as graph6.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum TraceOp {
    Start {
        graph6: String,
    },
    /// `current + other`, current vertices first.
    Join {
        graph6: String,
    },
    /// Identify vertex `at` of the current graph with `block_vertex` of the block.
    Coalesce {
        at: usize,
        graph6: String,
        block_vertex: usize,
    },
    Pendant {
        at: usize,
    },
    /// `current □ other`.
    Product {
        graph6: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    #[serde(flatten)]
    pub op: TraceOp,
    /// Index of the graph after this step.
    pub index: IndexValue,
}

/// Ordered log of a construction; replaying it rebuilds the final graph
/// vertex for vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
}

impl ConstructionTrace {
    pub fn start(initial: &Graph, index: IndexValue) -> Self {
        ConstructionTrace {
            steps: vec![TraceStep {
                op: TraceOp::Start {
                    graph6: serialize_graph6(initial),
                },
                index,
            }],
        }
    }

    pub fn push(&mut self, op: TraceOp, index: IndexValue) {
        self.steps.push(TraceStep { op, index });
    }

    pub fn final_index(&self) -> &IndexValue {
        &self.steps.last().expect("trace has a start step").index
    }

    pub fn replay(&self) -> Result<Graph> {
        let mut steps = self.steps.iter();
        let mut g = match steps.next().map(|s| &s.op) {
            Some(TraceOp::Start { graph6 }) => parse_graph6(graph6)?,
            _ => {
                return Err(Error::InvalidParameter(
                    "trace must begin with a start step".into(),
                ))
            }
        };
        for step in steps {
            g = match &step.op {
                TraceOp::Start { .. } => {
                    return Err(Error::InvalidParameter(
                        "start step in the middle of a trace".into(),
                    ))
                }
                TraceOp::Join { graph6 } => join(&g, &parse_graph6(graph6)?),
                TraceOp::Coalesce {
                    at,
                    graph6,
                    block_vertex,
                } => coalesce(&g, *at, &parse_graph6(graph6)?, *block_vertex)?,
                TraceOp::Pendant { at } => add_pendant(&g, *at)?,
                TraceOp::Product { graph6 } => cartesian_product(&g, &parse_graph6(graph6)?),
            };
        }
        Ok(g)
    }

    /// One JSON object per line.
    pub fn to_jsonl(&self) -> String {
        self.steps
            .iter()
            .map(|s| serde_json::to_string(s).expect("trace steps serialize") + "\n")
            .collect()
    }

    pub fn from_jsonl(text: &str) -> Result<Self> {
        let steps = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                serde_json::from_str(l)
                    .map_err(|e| Error::InvalidParameter(format!("trace line {}: {e}", i + 1)))
            })
            .collect::<Result<Vec<TraceStep>>>()?;
        Ok(ConstructionTrace { steps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::linalg::rat;

    #[test]
    fn jsonl_round_trip_and_replay() {
        let k2 = Family::Complete(2).build().unwrap();
        let mut t = ConstructionTrace::start(&k2, IndexValue::Finite(rat(1, 2)));
        t.push(TraceOp::Pendant { at: 1 }, IndexValue::Finite(rat(1, 1)));
        t.push(
            TraceOp::Coalesce {
                at: 0,
                graph6: serialize_graph6(&k2),
                block_vertex: 0,
            },
            IndexValue::Finite(rat(3, 2)),
        );
        let text = t.to_jsonl();
        assert!(text.lines().next().unwrap().contains(r#""op":"start""#));
        assert!(text.lines().last().unwrap().contains(r#""index":"3/2""#));
        let back = ConstructionTrace::from_jsonl(&text).unwrap();
        assert_eq!(back, t);
        let g = back.replay().unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 3));
    }

    #[test]
    fn replay_requires_start() {
        let t = ConstructionTrace {
            steps: vec![TraceStep {
                op: TraceOp::Pendant { at: 0 },
                index: IndexValue::Infinite,
            }],
        };
        assert!(t.replay().is_err());
    }
}
