use num_traits::Zero;
use serde::Serialize;

use super::{IndexValue, Potential};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{
    affine_index_from_int_rows, int, min_norm_solve, solve_affine_index, sum, Rat, RatMatrix,
};

/// Exact curvature index of a connected graph, with the verified unit-sum
/// witness when the index is finite.
pub fn curvature_index(g: &Graph) -> Result<(IndexValue, Option<Potential>)> {
    let d = g.distance_matrix()?;
    affine_index_from_int_rows(&d.to_rat_matrix(), d.int_rows())
}

/// What backs a distance-exceptional verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DxCertificate {
    /// Unit-sum vector in the kernel of `D`: the graph is exceptional.
    Kernel { potential: Potential },
    /// Unit-sum potential with nonzero constant: not exceptional.
    Potential { potential: Potential },
    /// `D x = 1` has only zero-sum solutions, so the index is `∞`.
    InfiniteIndex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DxVerdict {
    pub is_dx: bool,
    pub index: IndexValue,
    pub certificate: DxCertificate,
}

pub fn is_distance_exceptional(g: &Graph) -> Result<DxVerdict> {
    let (index, potential) = curvature_index(g)?;
    let certificate = match potential {
        None => DxCertificate::InfiniteIndex,
        Some(p) if p.constant().is_zero() => DxCertificate::Kernel { potential: p },
        Some(p) => DxCertificate::Potential { potential: p },
    };
    Ok(DxVerdict {
        is_dx: index.is_zero(),
        index,
        certificate,
    })
}

/// Distances truncated at 2 inside components, and 2 between components.
/// This is the metric of `G` after joining an extra vertex to everything,
/// restricted to the original vertices; it is defined for any graph.
pub fn modified_distance_matrix(g: &Graph) -> RatMatrix {
    let comp = g.components();
    RatMatrix::from_fn(g.n(), g.n(), |i, j| {
        if i == j {
            Rat::zero()
        } else if comp[i] == comp[j] && g.has_edge(i, j) {
            int(1)
        } else {
            int(2)
        }
    })
}

/// Index of [`modified_distance_matrix`]. Never fails: the matrix is always
/// symmetric.
pub fn modified_index(g: &Graph) -> IndexValue {
    solve_affine_index(&modified_distance_matrix(g))
        .expect("modified distance matrix is symmetric")
        .0
}

/// Minimum-norm solution of `D κ = n·1`, or `None` when that system has no
/// solution (which happens exactly for distance exceptional graphs).
pub fn steinerberger_curvature(g: &Graph) -> Result<Option<Vec<Rat>>> {
    let d = g.distance_matrix()?.to_rat_matrix();
    let n = g.n() as i64;
    min_norm_solve(&d, &vec![int(n); g.n()])
}

/// The index recovered as `n / 1ᵀκ` from the minimum-norm curvature.
pub fn index_via_pseudoinverse(g: &Graph) -> Result<IndexValue> {
    let kappa = steinerberger_curvature(g)?.ok_or(Error::DistanceExceptional)?;
    let s = sum(&kappa);
    if s.is_zero() {
        Ok(IndexValue::Infinite)
    } else {
        Ok(IndexValue::Finite(int(g.n() as i64) / s))
    }
}

pub fn wiener_index(g: &Graph) -> Result<u64> {
    Ok(g.distance_matrix()?.wiener())
}
