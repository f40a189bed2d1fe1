//! Simple undirected graphs on vertices `0..n`, their BFS metric, standard
//! families, compositions, graph6 I/O and construction traces.
//!
//! Graphs are immutable; every operation returns a new graph with a fixed,
//! documented vertex order so potentials built alongside stay aligned.

mod embedding;
mod families;
mod graph6;
mod ops;
mod trace;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub use embedding::{find_induced_embedding, Embedding};
pub use families::Family;
pub use graph6::{parse_graph6, serialize_graph6};
pub use ops::{add_pendant, cartesian_product, coalesce, coalesce_index_map, disjoint_union, join};
pub use trace::{ConstructionTrace, TraceOp, TraceStep};

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("graph needs at least one vertex".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!("repeated edge at {u}")));
            }
        }
        Ok(Graph { adj })
    }

    /// Builds from adjacency lists already known to be symmetric and simple.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, l)| l.iter().all(|&v| v != u && adj[v].binary_search(&u).is_ok())));
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    /// Component label per vertex, labels assigned in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n()];
        let mut next = 0;
        for s in 0..self.n() {
            if label[s] != usize::MAX {
                continue;
            }
            for (v, d) in self.bfs(s).iter().enumerate() {
                if d.is_some() {
                    label[v] = next;
                }
            }
            next += 1;
        }
        label
    }

    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        let n = self.n();
        let mut entries = Vec::with_capacity(n * n);
        for s in 0..n {
            for d in self.bfs(s) {
                entries.push(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(DistanceMatrix { n, entries })
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n();
        let mut inv = vec![usize::MAX; n];
        if perm.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: perm.len(),
            });
        }
        for (i, &p) in perm.iter().enumerate() {
            if p >= n || inv[p] != usize::MAX {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            inv[p] = i;
        }
        Ok(Graph::from_adjacency(
            perm.iter()
                .map(|&old| self.adj[old].iter().map(|&w| inv[w]).collect())
                .collect(),
        ))
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self> {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX && pos[w] > i {
                    edges.push((i, pos[w]));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges)
    }

    /// DOT text with vertex labels equal to indices.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Shortest-path distances of a connected graph, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// Half the sum of all entries.
    pub fn wiener(&self) -> u64 {
        self.entries.iter().map(|&d| u64::from(d)).sum::<u64>() / 2
    }

    pub fn to_rat_matrix(&self) -> crate::linalg::RatMatrix {
        crate::linalg::RatMatrix::from_fn(self.n, self.n, |i, j| {
            crate::linalg::int(i64::from(self.get(i, j)))
        })
    }

    pub(crate) fn int_rows(&self) -> Vec<Vec<num_bigint::BigInt>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|&d| num_bigint::BigInt::from(d)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_distance_matrix() {
        let d = Family::Path(3).build().unwrap().distance_matrix().unwrap();
        assert_eq!(d.row(0), &[0, 1, 2]);
        assert_eq!(d.row(1), &[1, 0, 1]);
        assert_eq!(d.row(2), &[2, 1, 0]);
    }

    #[test]
    fn k4_distance_matrix_is_j_minus_i() {
        let d = Family::Complete(4).build().unwrap().distance_matrix().unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(d.get(i, j), u32::from(i != j));
            }
        }
    }

    #[test]
    fn c5_rows_sum_to_six() {
        let d = Family::Cycle(5).build().unwrap().distance_matrix().unwrap();
        assert_eq!(d.diameter(), 2);
        for i in 0..5 {
            assert_eq!(d.row(i).iter().sum::<u32>(), 6);
        }
    }

    #[test]
    fn connectivity() {
        assert!(Family::Complete(2).build().unwrap().is_connected());
        let two = Family::Empty(2).build().unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.distance_matrix(), Err(Error::Disconnected));
        let g = join(
            &Family::Complete(3).build().unwrap(),
            &Family::Empty(3).build().unwrap(),
        );
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(Graph::from_edges(0, []).is_err());
    }

    #[test]
    fn dot_output() {
        let dot = Family::Path(2).build().unwrap().to_dot();
        assert_eq!(dot, "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }
}
