//! Graph compositions. Vertex orders:
//!
//! * product: `(u, v)` at `u·|V(H)| + v`
//! * join and disjoint union: `G` first, then `H`
//! * coalescence: merged vertex, then `V(G)∖{u}`, then `V(H)∖{v}`
//! * pendant: new vertex appended last

use super::Graph;
use crate::error::Result;

pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let idx = |u: usize, v: usize| u * nh + v;
    let mut adj = vec![Vec::new(); g.n() * nh];
    for u in 0..g.n() {
        for v in 0..nh {
            let list = &mut adj[idx(u, v)];
            list.extend(h.neighbors(v).iter().map(|&w| idx(u, w)));
            list.extend(g.neighbors(u).iter().map(|&w| idx(w, v)));
        }
    }
    Graph::from_adjacency(adj)
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let adj = (0..g.n())
        .map(|u| g.neighbors(u).to_vec())
        .chain((0..h.n()).map(|v| h.neighbors(v).iter().map(|&w| w + off).collect()))
        .collect();
    Graph::from_adjacency(adj)
}

pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n(), h.n());
    let adj = (0..ng)
        .map(|u| g.neighbors(u).iter().copied().chain(ng..ng + nh).collect())
        .chain((0..nh).map(|v| (0..ng).chain(h.neighbors(v).iter().map(|&w| w + ng)).collect()))
        .collect();
    Graph::from_adjacency(adj)
}

/// Position of old vertex `x` of `G` after coalescing `G` at `u`.
pub fn coalesce_index_map(u: usize, x: usize) -> usize {
    use std::cmp::Ordering::*;
    match x.cmp(&u) {
        Equal => 0,
        Less => x + 1,
        Greater => x,
    }
}

/// Identifies `u ∈ V(G)` with `v ∈ V(H)`.
pub fn coalesce(g: &Graph, u: usize, h: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(u)?;
    h.check_vertex(v)?;
    let gmap = |x: usize| coalesce_index_map(u, x);
    let hoff = g.n() - 1;
    let hmap = |y: usize| {
        use std::cmp::Ordering::*;
        match y.cmp(&v) {
            Equal => 0,
            Less => hoff + y + 1,
            Greater => hoff + y,
        }
    };
    let mut adj = vec![Vec::new(); g.n() + h.n() - 1];
    for x in 0..g.n() {
        adj[gmap(x)].extend(g.neighbors(x).iter().map(|&w| gmap(w)));
    }
    for y in 0..h.n() {
        adj[hmap(y)].extend(h.neighbors(y).iter().map(|&w| hmap(w)));
    }
    Ok(Graph::from_adjacency(adj))
}

/// Appends vertex `n` adjacent to `u`.
pub fn add_pendant(g: &Graph, u: usize) -> Result<Graph> {
    g.check_vertex(u)?;
    let n = g.n();
    let mut adj: Vec<Vec<usize>> = (0..n).map(|x| g.neighbors(x).to_vec()).collect();
    adj[u].push(n);
    adj.push(vec![u]);
    Ok(Graph::from_adjacency(adj))
}
