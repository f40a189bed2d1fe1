use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{
    cartesian_product, coalesce, coalesce_index_map, serialize_graph6, ConstructionTrace, Family, Graph,
    TraceOp,
};
use crate::index::{coalesce_potential, product_potential, IndexValue, Potential};
use crate::linalg::{int, rat, Rat};

/// A small graph with a known unit-sum potential.
#[derive(Debug, Clone)]
pub(crate) struct Block {
    pub graph: Graph,
    pub x: Vec<Rat>,
    pub iota: Rat,
}

impl Block {
    /// `K_{1,1,2n+4}`, index `−1/n`. Vertex 0 is an apex.
    pub fn unit(n: &BigInt) -> Result<Block> {
        let leaves: BigInt = n * 2 + 4;
        let leaves: usize = leaves
            .try_into()
            .map_err(|_| Error::InvalidParameter(format!("Egyptian term {n} is too large to build")))?;
        let graph = Family::CompleteMultipartite(vec![1, 1, leaves]).build()?;
        let n = Rat::from_integer(n.clone());
        let one = int(1);
        let apex = (&n + &one) / &n;
        let leaf = -(&one / (&n * int(2)));
        let mut x = vec![apex.clone(), apex];
        x.extend(std::iter::repeat_n(leaf, leaves));
        Ok(Block {
            graph,
            x,
            iota: -(one / n),
        })
    }

    pub fn k2() -> Block {
        Block {
            graph: Family::Complete(2).build().expect("K2"),
            x: vec![rat(1, 2), rat(1, 2)],
            iota: rat(1, 2),
        }
    }

    pub fn p3() -> Block {
        Block {
            graph: Family::Path(3).build().expect("P3"),
            x: vec![rat(1, 2), int(0), rat(1, 2)],
            iota: int(1),
        }
    }
}

/// A graph grown by compositions, carrying a potential, the position of
/// every original vertex, and the trace. Each step's potential is checked
/// against the new graph before the step is recorded.
#[derive(Debug, Clone)]
pub(crate) struct Chain {
    pub graph: Graph,
    pub potential: Potential,
    pub map: Vec<usize>,
    pub trace: ConstructionTrace,
}

impl Chain {
    pub fn new(graph: Graph, potential: Potential) -> Chain {
        let trace = ConstructionTrace::start(&graph, IndexValue::Finite(potential.constant().clone()));
        Chain {
            map: (0..graph.n()).collect(),
            graph,
            potential,
            trace,
        }
    }

    pub fn from_block(b: Block) -> Result<Chain> {
        let p = Potential::for_graph(&b.graph, b.x, b.iota)?;
        Ok(Chain::new(b.graph, p))
    }

    pub fn index(&self) -> &Rat {
        self.potential.constant()
    }

    pub fn coalesce(&mut self, at: usize, block: &Block, block_vertex: usize) -> Result<()> {
        let graph = coalesce(&self.graph, at, &block.graph, block_vertex)?;
        let x = coalesce_potential(self.potential.x(), at, &block.x, block_vertex)?;
        let potential = Potential::for_graph(&graph, x, self.index() + &block.iota)?;
        for m in &mut self.map {
            *m = coalesce_index_map(at, *m);
        }
        self.trace.push(
            TraceOp::Coalesce {
                at,
                graph6: serialize_graph6(&block.graph),
                block_vertex,
            },
            IndexValue::Finite(potential.constant().clone()),
        );
        self.graph = graph;
        self.potential = potential;
        Ok(())
    }

    /// `current □ block`; original vertex `v` is tracked as `(v, 0)`.
    pub fn product(&mut self, block: &Block) -> Result<()> {
        let graph = cartesian_product(&self.graph, &block.graph);
        let x = product_potential(self.potential.x(), &block.x);
        let potential = Potential::for_graph(&graph, x, self.index() + &block.iota)?;
        let h = block.graph.n();
        for m in &mut self.map {
            *m *= h;
        }
        self.trace.push(
            TraceOp::Product {
                graph6: serialize_graph6(&block.graph),
            },
            IndexValue::Finite(potential.constant().clone()),
        );
        self.graph = graph;
        self.potential = potential;
        Ok(())
    }
}
