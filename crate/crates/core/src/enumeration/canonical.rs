use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled by [`enumerate_connected`]; bigger censuses go
/// through graph6 files from an external generator.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Largest order [`canonical_code`] accepts (the code must fit in 64 bits).
const MAX_CODE_ORDER: usize = 11;

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    width: usize,
    perm: Vec<usize>,
    used: Vec<bool>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    // Column j of the code holds the pairs (0, j), ..., (j − 1, j), first
    // bit most significant. `prefix` holds `bits` bits for columns < depth.
    fn run(&mut self, depth: usize, prefix: u64, bits: usize) {
        if depth == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.perm.clone()));
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let mut code = prefix;
            for i in 0..depth {
                code = (code << 1) | u64::from(self.g.has_edge(self.perm[i], v));
            }
            let len = bits + depth;
            if let Some((best, _)) = &self.best {
                if code > best >> (self.width - len) {
                    continue;
                }
            }
            self.used[v] = true;
            self.perm.push(v);
            self.run(depth + 1, code, len);
            self.perm.pop();
            self.used[v] = false;
        }
    }
}

fn search(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CODE_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut s = Search {
        g,
        n,
        width: n * (n - 1) / 2,
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    s.run(0, 0, 0);
    Ok(s.best.expect("at least one labeling"))
}

/// Lexicographically smallest upper-triangle bitstring (column-major) over
/// all relabelings. Two graphs of the same order are isomorphic exactly
/// when their codes agree.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    Ok(search(g)?.0)
}

/// The relabeling of `g` that realises [`canonical_code`].
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, perm) = search(g)?;
    g.permuted(&perm)
}

/// Number of permutations preserving adjacency.
pub fn automorphism_count(g: &Graph) -> u64 {
    fn go(g: &Graph, perm: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let k = perm.len();
        if k == g.n() {
            return 1;
        }
        let mut total = 0;
        for v in 0..g.n() {
            if used[v] || g.degree(v) != g.degree(k) {
                continue;
            }
            if (0..k).all(|i| g.has_edge(i, k) == g.has_edge(perm[i], v)) {
                used[v] = true;
                perm.push(v);
                total += go(g, perm, used);
                perm.pop();
                used[v] = false;
            }
        }
        total
    }
    go(g, &mut Vec::new(), &mut vec![false; g.n()])
}

/// One canonical representative per isomorphism class of connected graphs
/// on `n` vertices, sorted by canonical code.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// extending each class of order `n − 1` by a vertex with every nonempty
/// neighbourhood reaches all classes of order `n`.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut level = vec![Graph::from_edges(1, [])?];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &level {
            let edges: Vec<(usize, usize)> = base.edges().collect();
            for mask in 1u32..(1 << (m - 1)) {
                let extra = (0..m - 1).filter(|i| mask >> i & 1 == 1).map(|i| (i, m - 1));
                let g = Graph::from_edges(m, edges.iter().copied().chain(extra))?;
                let (code, perm) = search(&g)?;
                if seen.insert(code) {
                    next.push((code, g.permuted(&perm)?));
                }
            }
        }
        next.sort_by_key(|(c, _)| *c);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}
