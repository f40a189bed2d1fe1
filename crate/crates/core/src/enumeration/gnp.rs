use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{pool, sample_gnp};
use crate::error::{Error, Result};
use crate::index::{curvature_index, IndexValue};
use crate::linalg::{format_rat, int, rat_to_f64, Rat};

/// Exact indices of connected Erdős–Rényi samples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GnpSample {
    pub n: usize,
    pub p: String,
    pub trials: usize,
    pub seed: u64,
    /// Disconnected draws thrown away before `trials` connected ones were
    /// collected.
    pub discarded: usize,
    pub indices: Vec<IndexValue>,
    pub diam2_fraction: f64,
    pub median: f64,
    /// Fraction of indices within 0.1 of `2 − p`.
    pub concentration_fraction: f64,
}

/// Draws connected `G(n, p)` graphs from a ChaCha8 stream seeded with
/// `seed` until `trials` are collected, then computes their indices on
/// `jobs` workers. The sample depends only on `(n, p, trials, seed)`.
pub fn gnp_experiment(n: usize, p: &Rat, trials: usize, seed: u64, jobs: usize) -> Result<GnpSample> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    if *p <= int(0) || *p >= int(1) {
        return Err(Error::InvalidParameter(
            "p must lie strictly between 0 and 1".into(),
        ));
    }
    let (num, den) = match (p.numer().to_u64(), p.denom().to_u64()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::InvalidParameter("p has too large a denominator".into())),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_draws = trials.saturating_mul(1000).saturating_add(1000);
    let mut graphs = Vec::with_capacity(trials);
    let mut discarded = 0;
    while graphs.len() < trials {
        if graphs.len() + discarded >= max_draws {
            return Err(Error::InvalidParameter(format!(
                "G({n}, {}) is too rarely connected to collect {trials} samples",
                format_rat(p)
            )));
        }
        let g = sample_gnp(n, num, den, &mut rng)?;
        if g.is_connected() {
            graphs.push(g);
        } else {
            discarded += 1;
        }
    }
    let results: Vec<(IndexValue, bool)> = pool(jobs)?.install(|| {
        graphs
            .par_iter()
            .map(|g| {
                let diam2 = g.distance_matrix().map(|d| d.diameter() == 2)?;
                Ok((curvature_index(g)?.0, diam2))
            })
            .collect::<Result<_>>()
    })?;

    let indices: Vec<IndexValue> = results.iter().map(|(i, _)| i.clone()).collect();
    let frac = |k: usize| {
        if trials == 0 {
            0.0
        } else {
            k as f64 / trials as f64
        }
    };
    let diam2_fraction = frac(results.iter().filter(|(_, d)| *d).count());
    let target = 2.0 - rat_to_f64(p);
    let concentration_fraction = frac(
        indices
            .iter()
            .filter(|i| (i.to_f64() - target).abs() <= 0.1)
            .count(),
    );
    let mut sorted: Vec<f64> = indices.iter().map(IndexValue::to_f64).collect();
    sorted.sort_by(f64::total_cmp);
    let median = match sorted.len() {
        0 => f64::NAN,
        k if k % 2 == 1 => sorted[k / 2],
        k => (sorted[k / 2 - 1] + sorted[k / 2]) / 2.0,
    };
    Ok(GnpSample {
        n,
        p: format_rat(p),
        trials,
        seed,
        discarded,
        indices,
        diam2_fraction,
        median,
        concentration_fraction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn deterministic_across_workers() {
        let a = gnp_experiment(9, &rat(1, 2), 12, 5, 1).unwrap();
        let b = gnp_experiment(9, &rat(1, 2), 12, 5, 3).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert_eq!(a.indices.len(), 12);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(gnp_experiment(1, &rat(1, 2), 1, 0, 1).is_err());
        assert!(gnp_experiment(5, &int(1), 1, 0, 1).is_err());
        assert!(gnp_experiment(5, &int(0), 1, 0, 1).is_err());
    }
}
