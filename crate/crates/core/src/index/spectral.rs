use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use super::{curvature_index, IndexValue};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralOptions {
    /// Allowed gap between the floating-point and the exact index,
    /// relative to `max(1, |exact|)`.
    pub tolerance: f64,
    /// Eigenvalues with `|λ| < rank_threshold · max|λ|` are treated as zero.
    pub rank_threshold: f64,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions {
            tolerance: 1e-6,
            rank_threshold: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectralVerdict {
    Agree,
    Disagree,
    /// The all-ones vector has weight on a numerically zero eigenvalue, so
    /// the floating-point formula says nothing reliable.
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralCheck {
    /// Eigenvalues of `D` in ascending order.
    pub eigenvalues: Vec<f64>,
    /// `(u_iᵀ1)²` for the matching unit eigenvectors.
    pub projections: Vec<f64>,
    /// `Σ (u_iᵀ1)² / λ_i` over the eigenvalues kept.
    pub reciprocal_sum: f64,
    /// `1 / reciprocal_sum`, infinite when the sum vanishes.
    pub float_index: f64,
    pub exact: IndexValue,
    pub verdict: SpectralVerdict,
}

/// Recomputes the index from the eigendecomposition of `D` and compares it
/// with the exact value.
pub fn spectral_cross_check(g: &Graph, opts: &SpectralOptions) -> Result<SpectralCheck> {
    let d = g.distance_matrix()?;
    let n = g.n();
    let m = DMatrix::from_fn(n, n, |i, j| d.get(i, j) as f64);
    let eig = SymmetricEigen::try_new(m, 1e-14, 10_000).ok_or(Error::EigenFailure)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let projections: Vec<f64> = order
        .iter()
        .map(|&i| eig.eigenvectors.column(i).sum().powi(2))
        .collect();

    let scale = eigenvalues.iter().fold(0.0_f64, |a, l| a.max(l.abs()));
    let cutoff = opts.rank_threshold * scale;
    let mut reciprocal_sum = 0.0;
    let mut leaks = false;
    for (l, p) in eigenvalues.iter().zip(&projections) {
        if l.abs() <= cutoff {
            leaks |= *p > opts.tolerance;
        } else {
            reciprocal_sum += p / l;
        }
    }
    let float_index = if reciprocal_sum.abs() < 1e-12 * n as f64 {
        f64::INFINITY
    } else {
        1.0 / reciprocal_sum
    };

    let exact = curvature_index(g)?.0;
    let verdict = if leaks {
        SpectralVerdict::Inconclusive
    } else {
        match &exact {
            IndexValue::Infinite if float_index.is_infinite() => SpectralVerdict::Agree,
            IndexValue::Finite(_) if float_index.is_finite() => {
                let e = exact.to_f64();
                if (float_index - e).abs() <= opts.tolerance * e.abs().max(1.0) {
                    SpectralVerdict::Agree
                } else {
                    SpectralVerdict::Disagree
                }
            }
            _ => SpectralVerdict::Disagree,
        }
    };
    Ok(SpectralCheck {
        eigenvalues,
        projections,
        reciprocal_sum,
        float_index,
        exact,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn agrees_on_small_families() {
        for f in [
            Family::Path(6),
            Family::Cycle(9),
            Family::Complete(5),
            Family::Grid(3, 3),
        ] {
            let c = spectral_cross_check(&f.build().unwrap(), &SpectralOptions::default()).unwrap();
            assert_eq!(c.verdict, SpectralVerdict::Agree, "{f:?}");
            assert!(c.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
            let total: f64 = c.projections.iter().sum();
            assert!((total - c.eigenvalues.len() as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn k1_is_inconclusive() {
        let c =
            spectral_cross_check(&Family::Complete(1).build().unwrap(), &SpectralOptions::default()).unwrap();
        assert_eq!(c.verdict, SpectralVerdict::Inconclusive);
    }
}
