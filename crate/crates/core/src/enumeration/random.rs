use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Uniform labelled tree on `n` vertices, decoded from a random Prüfer
/// sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("tree needs at least one vertex".into()));
    }
    if n <= 2 {
        return Graph::from_edges(n, (n == 2).then_some((0, 1)));
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges)
}

/// One draw of `G(n, num/den)`, pairs visited in lexicographic order.
pub fn sample_gnp(n: usize, num: u64, den: u64, rng: &mut impl Rng) -> Result<Graph> {
    if den == 0 || num > den {
        return Err(Error::InvalidParameter(format!(
            "{num}/{den} is not a probability"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_range(0..den) < num {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Redraws `G(n, num/den)` until the sample is connected. Gives up after
/// `max_attempts` draws.
pub fn random_connected_gnp(
    n: usize,
    num: u64,
    den: u64,
    max_attempts: usize,
    rng: &mut impl Rng,
) -> Result<Graph> {
    for _ in 0..max_attempts {
        let g = sample_gnp(n, num, den, rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no connected G({n}, {num}/{den}) sample in {max_attempts} draws"
    )))
}
