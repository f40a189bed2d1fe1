use super::{cartesian_product, Graph};
use crate::error::{Error, Result};

/// Named graph families with their canonical vertex orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `P_k`, vertices in path order.
    Path(usize),
    /// `C_n`, `n ≥ 3`.
    Cycle(usize),
    Complete(usize),
    /// `K_{a_1,…,a_k}`, parts laid out consecutively.
    CompleteMultipartite(Vec<usize>),
    /// `Q_d`; vertex `i` is the bit string of `i`.
    Hypercube(usize),
    /// `P_n □ P_m` in row-major order.
    Grid(usize, usize),
    /// `C_n^{□d}`.
    Torus {
        n: usize,
        d: usize,
    },
    /// `B_k`, `k ≥ 3`: shared endpoint `v_1`, the interior of `P_k`, the
    /// second shared endpoint `v_k`, then the interiors of the three
    /// `P_{k+1}` copies, each listed from the `v_1` side.
    Basket(usize),
    /// `a` isolated vertices.
    Empty(usize),
}

fn require(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Path(k) => {
                require(k >= 1, "path needs k >= 1")?;
                Graph::from_edges(k, (1..k).map(|i| (i - 1, i)))
            }
            Family::Cycle(n) => {
                require(n >= 3, "cycle needs n >= 3")?;
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            Family::Complete(n) => {
                require(n >= 1, "complete graph needs n >= 1")?;
                Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            }
            Family::CompleteMultipartite(ref parts) => {
                require(!parts.is_empty(), "multipartite needs at least one part")?;
                require(parts.iter().all(|&a| a >= 1), "parts must be >= 1")?;
                let n: usize = parts.iter().sum();
                let mut part = Vec::with_capacity(n);
                for (p, &a) in parts.iter().enumerate() {
                    part.extend(std::iter::repeat_n(p, a));
                }
                let edges: Vec<_> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| part[i] != part[j])
                    .collect();
                Graph::from_edges(n, edges)
            }
            Family::Hypercube(d) => {
                require((1..=20).contains(&d), "hypercube needs 1 <= d <= 20")?;
                let n = 1usize << d;
                Graph::from_edges(
                    n,
                    (0..n).flat_map(|i| (0..d).map(move |b| (i, i ^ (1 << b))).filter(|&(i, j)| i < j)),
                )
            }
            Family::Grid(n, m) => Ok(cartesian_product(
                &Family::Path(n).build()?,
                &Family::Path(m).build()?,
            )),
            Family::Torus { n, d } => {
                require(d >= 1, "torus needs d >= 1")?;
                let c = Family::Cycle(n).build()?;
                let mut g = c.clone();
                for _ in 1..d {
                    g = cartesian_product(&g, &c);
                }
                Ok(g)
            }
            Family::Basket(k) => {
                require(k >= 3, "basket needs k >= 3")?;
                let n = 4 * k - 3;
                let left = 0;
                let right = k - 1;
                let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
                for copy in 0..3 {
                    let base = k + copy * (k - 1);
                    edges.push((left, base));
                    edges.extend((base..base + k - 2).map(|i| (i, i + 1)));
                    edges.push((base + k - 2, right));
                }
                Graph::from_edges(n, edges)
            }
            Family::Empty(a) => {
                require(a >= 1, "empty graph needs a >= 1")?;
                Graph::from_edges(a, [])
            }
        }
    }
}
