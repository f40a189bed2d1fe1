#![allow(dead_code)]

use std::path::PathBuf;

use curvex::enumeration::random_connected_gnp;
use curvex::graph::{join, parse_graph6, Family};
use curvex::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` connected graphs with orders in `nmin..=nmax` and edge
/// probability drawn from {1/3, 1/2, 2/3}.
pub fn random_pool(seed: u64, count: usize, nmin: usize, nmax: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.random_range(nmin..=nmax);
            let (num, den) = [(1, 3), (1, 2), (2, 3)][r.random_range(0..3)];
            random_connected_gnp(n, num, den, 10_000, &mut r).unwrap()
        })
        .collect()
}

pub fn family(f: Family) -> Graph {
    f.build().unwrap()
}

/// `K_3 + 3K_1` (join), index ∞.
pub fn k3_join_3k1() -> Graph {
    join(&family(Family::Complete(3)), &family(Family::Empty(3)))
}

/// `K_2 + 4K_1` (join), index ∞.
pub fn k2_join_4k1() -> Graph {
    join(&family(Family::Complete(2)), &family(Family::Empty(4)))
}

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn read_graph6_file(name: &str) -> Vec<Graph> {
    std::fs::read_to_string(data_path(name))
        .unwrap()
        .lines()
        .map(|l| parse_graph6(l).unwrap())
        .collect()
}
