use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::chain::{Block, Chain};
use super::{egyptian_fraction_with, EgyptianStrategy};
use crate::error::Result;
use crate::graph::{find_induced_embedding, join, ConstructionTrace, Embedding, Family, Graph, TraceOp};
use crate::index::{curvature_index, IndexValue, Potential};

/// Which vertex of the current graph each block is merged at. Blocks are
/// always merged at their vertex 0 (an apex of `K_{1,1,·}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MergePolicy {
    /// Vertex 0 of the current graph.
    #[default]
    First,
    /// The images of the original vertices in turn.
    Spread,
    /// A uniform vertex of the current graph from a ChaCha8 stream.
    Random { seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EmbedOptions {
    pub merge: MergePolicy,
    pub strategy: EgyptianStrategy,
}

#[derive(Debug, Clone)]
pub struct EmbedResult {
    pub graph: Graph,
    pub trace: ConstructionTrace,
    /// Position of each input vertex in `graph`.
    pub map: Vec<usize>,
    /// Kernel certificate of the output: `D x = 0`, `1ᵀx = 1`.
    pub potential: Potential,
    /// Whether the input had to be joined with two new vertices first.
    pub joined: bool,
    pub embedding: Embedding,
}

pub fn algorithm1_embed(g: &Graph) -> Result<EmbedResult> {
    algorithm1_embed_with(g, &EmbedOptions::default())
}

/// Embeds `g` as an induced subgraph of a distance exceptional graph.
///
/// A disconnected input or one with infinite index is first joined with
/// `2K_1`, which has index 1. While the index is negative a `K_2` is
/// merged (+1/2 each). A positive index is then written as a sum of unit
/// fractions `1/nᵢ` and one `K_{1,1,2nᵢ+4}` (index `−1/nᵢ`) is merged per
/// term.
pub fn algorithm1_embed_with(g: &Graph, opts: &EmbedOptions) -> Result<EmbedResult> {
    let start = if g.is_connected() {
        match curvature_index(g)? {
            (IndexValue::Finite(_), Some(p)) => Some((g.clone(), p)),
            _ => None,
        }
    } else {
        None
    };
    let joined = start.is_none();
    let mut chain = match start {
        Some((graph, p)) => Chain::new(graph, p),
        None => {
            let two = Family::Empty(2).build()?;
            let big = join(g, &two);
            let (_, p) = curvature_index(&big)?;
            let p = p.expect("joining 2K1 gives index 1");
            let mut trace = ConstructionTrace::start(g, IndexValue::Infinite);
            let mut c = Chain::new(big, p);
            trace.push(
                TraceOp::Join {
                    graph6: crate::graph::serialize_graph6(&two),
                },
                IndexValue::Finite(c.index().clone()),
            );
            c.trace = trace;
            c.map = (0..g.n()).collect();
            c
        }
    };

    let mut rng = match opts.merge {
        MergePolicy::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut merges = 0usize;
    let mut next_vertex = |chain: &Chain| -> usize {
        let v = match (opts.merge, rng.as_mut()) {
            (MergePolicy::Spread, _) => chain.map[merges % chain.map.len()],
            (MergePolicy::Random { .. }, Some(r)) => r.random_range(0..chain.graph.n()),
            _ => 0,
        };
        merges += 1;
        v
    };

    while chain.index().is_negative() {
        let at = next_vertex(&chain);
        chain.coalesce(at, &Block::k2(), 0)?;
    }
    if chain.index().is_positive() {
        let terms = egyptian_fraction_with(chain.index(), opts.strategy)?;
        for n in terms.terms() {
            let at = next_vertex(&chain);
            chain.coalesce(at, &Block::unit(n)?, 0)?;
        }
    }
    debug_assert!(chain.index().is_zero());
    let embedding =
        find_induced_embedding(g, &chain.graph, &chain.map)?.expect("compositions keep the input induced");
    Ok(EmbedResult {
        graph: chain.graph,
        trace: chain.trace,
        map: chain.map,
        potential: chain.potential,
        joined,
        embedding,
    })
}
