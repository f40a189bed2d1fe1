use super::Graph;
use crate::error::{Error, Result};

/// A verified induced copy of `g` inside a larger graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
    /// `d_big(f(x), f(y)) = d_g(x, y)` for all pairs.
    pub isometric: bool,
}

/// Checks a candidate vertex map `x ↦ map[x]` from `g` into `big`.
///
/// Returns `None` when the image does not induce `g`. This verifies maps
/// produced by constructions; it does not search for one.
pub fn find_induced_embedding(g: &Graph, big: &Graph, map: &[usize]) -> Result<Option<Embedding>> {
    if map.len() != g.n() {
        return Err(Error::MapInvalid(format!(
            "map has {} entries for a graph on {} vertices",
            map.len(),
            g.n()
        )));
    }
    let mut seen = vec![false; big.n()];
    for &y in map {
        if y >= big.n() {
            return Err(Error::MapInvalid(format!("image {y} out of range")));
        }
        if std::mem::replace(&mut seen[y], true) {
            return Err(Error::MapInvalid(format!("image {y} used twice")));
        }
    }
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            if g.has_edge(x, y) != big.has_edge(map[x], map[y]) {
                return Ok(None);
            }
        }
    }
    let isometric = (0..g.n()).all(|x| {
        let dg = g.bfs(x);
        let db = big.bfs(map[x]);
        (0..g.n()).all(|y| dg[y] == db[map[y]])
    });
    Ok(Some(Embedding {
        map: map.to_vec(),
        isometric,
    }))
}
