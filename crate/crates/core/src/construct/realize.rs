use num_traits::{Signed, Zero};

use super::chain::{Block, Chain};
use super::{egyptian_fraction_with, EgyptianStrategy};
use crate::error::Result;
use crate::graph::{parse_graph6, ConstructionTrace, Graph};
use crate::index::{curvature_index, Potential};
use crate::linalg::Rat;

/// `K_{1,1,1,4}` in graph6, one of the two distance exceptional graphs on
/// seven vertices (the other is `K_{1,1,1,1,3}`, `FF~~w`). Both were found
/// by scanning every connected graph of order 7.
pub const DX7_GRAPH6: &str = "F?~~w";

/// How the blocks of a realisation are put together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Composition {
    /// Coalesce every block at vertex 0; orders add.
    #[default]
    Coalescence,
    /// Cartesian product of the blocks; orders multiply, so only practical
    /// for small targets.
    Product,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RealizeOptions {
    pub strategy: EgyptianStrategy,
    pub composition: Composition,
}

#[derive(Debug, Clone)]
pub struct Realization {
    pub graph: Graph,
    pub trace: ConstructionTrace,
    /// Verified certificate: `D x = q·1`, `1ᵀx = 1`.
    pub potential: Potential,
}

pub fn realize_rational_index(q: &Rat) -> Result<Realization> {
    realize_rational_index_with(q, &RealizeOptions::default())
}

/// A graph whose index is exactly `q`.
///
/// * `q = 0`: the stored graph [`DX7_GRAPH6`].
/// * `q < 0`: one `K_{1,1,2n+4}` block (index `−1/n`) per Egyptian term of
///   `−q`.
/// * `q > 0`: with `m` the least integer above `q` and `r = m − q`, blocks
///   for `r` combined with `m` copies of `P_3` (index 1 each).
pub fn realize_rational_index_with(q: &Rat, opts: &RealizeOptions) -> Result<Realization> {
    if q.is_zero() {
        let graph = parse_graph6(DX7_GRAPH6)?;
        let (index, potential) = curvature_index(&graph)?;
        let potential = potential.expect("stored graph has finite index");
        let trace = ConstructionTrace::start(&graph, index);
        return Ok(Realization {
            graph,
            trace,
            potential,
        });
    }
    let (negative_part, p3_count) = if q.is_negative() {
        (-q.clone(), 0)
    } else {
        let m = q.floor() + Rat::from_integer(1.into());
        let count: usize = m
            .to_integer()
            .try_into()
            .map_err(|_| crate::error::Error::InvalidParameter(format!("{q} is too large to realise")))?;
        (m - q, count)
    };
    let terms = egyptian_fraction_with(&negative_part, opts.strategy)?;
    let mut blocks = terms
        .terms()
        .iter()
        .map(Block::unit)
        .collect::<Result<Vec<_>>>()?;
    blocks.extend(std::iter::repeat_n(Block::p3(), p3_count));

    let mut iter = blocks.into_iter();
    let mut chain = Chain::from_block(iter.next().expect("at least one term"))?;
    for b in iter {
        match opts.composition {
            Composition::Coalescence => chain.coalesce(0, &b, 0)?,
            Composition::Product => chain.product(&b)?,
        }
    }
    Ok(Realization {
        graph: chain.graph,
        trace: chain.trace,
        potential: chain.potential,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::IndexValue;
    use crate::linalg::{int, rat};

    #[test]
    fn minus_half_is_a_single_block() {
        let r = realize_rational_index(&rat(-1, 2)).unwrap();
        assert_eq!(r.graph.n(), 10);
        assert_eq!(r.potential.constant(), &rat(-1, 2));
    }

    #[test]
    fn stored_graph_is_exceptional() {
        let r = realize_rational_index(&int(0)).unwrap();
        assert_eq!(r.graph.n(), 7);
        assert_eq!(curvature_index(&r.graph).unwrap().0, IndexValue::Finite(int(0)));
    }

    #[test]
    fn product_route_for_one() {
        let opts = RealizeOptions {
            composition: Composition::Product,
            ..Default::default()
        };
        let r = realize_rational_index_with(&int(1), &opts).unwrap();
        assert_eq!(r.graph.n(), 72);
        assert_eq!(r.potential.constant(), &int(1));
        assert_eq!(r.trace.replay().unwrap(), r.graph);
    }
}
