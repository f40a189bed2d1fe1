//! Small-graph enumeration, graph6 census scans and random-graph sampling.

mod canonical;
mod census;
mod gnp;
mod random;

pub use canonical::{
    automorphism_count, canonical_code, canonical_form, enumerate_connected, MAX_ENUMERATION_ORDER,
};
pub use census::{census, scan_graph6, CensusReport, MalformedLine};
pub use gnp::{gnp_experiment, GnpSample};
pub use random::{random_connected_gnp, random_tree, sample_gnp};

use crate::error::{Error, Result};

/// A rayon pool with exactly `jobs` workers.
pub(crate) fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    if jobs == 0 {
        return Err(Error::InvalidParameter("worker count must be positive".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start workers: {e}")))
}
