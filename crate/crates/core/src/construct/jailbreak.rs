use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::basket_potential;
use crate::error::{Error, Result};
use crate::graph::{add_pendant, ConstructionTrace, Family, Graph, TraceOp};
use crate::index::{IndexValue, Potential};
use crate::linalg::{rat, Rat};

/// Largest `j` accepted: `j = 6` already needs 398 574 pendants.
pub const MAX_JAILBREAK_J: usize = 6;

/// Where pendants go.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Placement {
    /// Vertex of the evolving graph for each pendant in turn.
    Explicit(Vec<usize>),
    /// Uniform vertex of the evolving graph, from a ChaCha8 stream.
    Random { seed: u64 },
}

#[derive(Debug, Clone)]
pub struct PendantResult {
    pub graph: Graph,
    /// Verified certificate for the final graph.
    pub potential: Potential,
    pub placements: Vec<usize>,
    pub trace: ConstructionTrace,
}

impl PendantResult {
    pub fn index(&self) -> IndexValue {
        IndexValue::Finite(self.potential.constant().clone())
    }

    pub fn is_dx(&self) -> bool {
        self.potential.constant().is_zero()
    }
}

/// `s = ((−3)^{2j+1} + 4(2j+1) − 1)/8`, the index of `basket(2j+1)`.
pub fn jailbreak_basket_index(j: usize) -> Result<i64> {
    if j == 0 || j > MAX_JAILBREAK_J {
        return Err(Error::InvalidParameter(format!(
            "j must lie in 1..={MAX_JAILBREAK_J}"
        )));
    }
    let k = 2 * j as i64 + 1;
    Ok(((-3i64).pow(k as u32) + 4 * k - 1) / 8)
}

/// Hangs `count` pendants on `graph` one at a time, updating the potential
/// by the pendant rule (constant +1/2 each time), and verifies the final
/// certificate exactly.
pub fn attach_pendants(
    graph: &Graph,
    potential: &Potential,
    count: usize,
    placement: &Placement,
) -> Result<PendantResult> {
    let mut rng = match placement {
        Placement::Explicit(v) if v.len() != count => {
            return Err(Error::PlacementLengthMismatch {
                expected: count,
                got: v.len(),
            })
        }
        Placement::Explicit(_) => None,
        Placement::Random { seed } => Some(ChaCha8Rng::seed_from_u64(*seed)),
    };
    let half = rat(1, 2);
    let mut g = graph.clone();
    let mut x = potential.x().to_vec();
    let mut c: Rat = potential.constant().clone();
    let mut trace = ConstructionTrace::start(graph, IndexValue::Finite(c.clone()));
    let mut placements = Vec::with_capacity(count);
    for step in 0..count {
        let at = match (placement, rng.as_mut()) {
            (Placement::Explicit(v), _) => v[step],
            (_, Some(r)) => r.random_range(0..g.n()),
            _ => unreachable!("random placement always has a generator"),
        };
        g = add_pendant(&g, at)?;
        x[at] -= &half;
        x.push(half.clone());
        c += &half;
        trace.push(TraceOp::Pendant { at }, IndexValue::Finite(c.clone()));
        placements.push(at);
    }
    let potential = Potential::for_graph(&g, x, c)?;
    Ok(PendantResult {
        graph: g,
        potential,
        placements,
        trace,
    })
}

/// `basket(2j+1)` with `2|s|` pendants added, which lands exactly on index
/// zero. The returned potential is then a unit-sum kernel vector of the
/// distance matrix: the DX certificate.
pub fn basket_jailbreak(j: usize, placement: &Placement) -> Result<PendantResult> {
    let s = jailbreak_basket_index(j)?;
    let k = 2 * j + 1;
    let basket = basket_potential(k)?;
    let g = Family::Basket(k).build()?;
    attach_pendants(&g, &basket.potential, (2 * s.unsigned_abs()) as usize, placement)
}
