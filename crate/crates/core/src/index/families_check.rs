use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{curvature_index, family_index_formula, FamilyFormula, IndexValue};
use crate::enumeration::random_tree;
use crate::error::Result;
use crate::graph::{Family, Graph};

#[derive(Debug, Clone, Serialize)]
pub struct FamilyCheck {
    pub family: String,
    pub order: usize,
    pub expected: IndexValue,
    pub computed: IndexValue,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyVerification {
    pub checks: Vec<FamilyCheck>,
    pub failures: usize,
}

impl FamilyVerification {
    pub fn all_pass(&self) -> bool {
        self.failures == 0
    }
}

fn partitions(total: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if total == 0 {
        out.push(prefix.clone());
        return;
    }
    for p in (1..=max_part.min(total)).rev() {
        prefix.push(p);
        partitions(total - p, p, prefix, out);
        prefix.pop();
    }
}

/// Compares closed-form indices with exact computation on the standard
/// families: random trees, cycles, hypercubes, grids, complete graphs, all
/// complete multipartite graphs on at most nine vertices, and baskets up to
/// `kmax`.
pub fn verify_families(kmax: usize, seed: u64) -> Result<FamilyVerification> {
    let mut cases: Vec<(String, Graph, FamilyFormula)> = Vec::new();
    let mut push_family = |f: Family| -> Result<()> {
        let formula = FamilyFormula::for_family(&f).expect("family has a formula");
        cases.push((format!("{f:?}"), f.build()?, formula));
        Ok(())
    };
    for n in 3..=12 {
        push_family(Family::Cycle(n))?;
    }
    for d in 2..=5 {
        push_family(Family::Hypercube(d))?;
    }
    for n in 1..=4 {
        for m in n..=4 {
            push_family(Family::Grid(n, m))?;
        }
    }
    for n in 2..=8 {
        push_family(Family::Complete(n))?;
    }
    for total in 2..=9 {
        let mut parts = Vec::new();
        partitions(total, total, &mut Vec::new(), &mut parts);
        for p in parts.into_iter().filter(|p| p.len() >= 2) {
            push_family(Family::CompleteMultipartite(p))?;
        }
    }
    for k in 3..=kmax {
        push_family(Family::Basket(k))?;
    }
    push_family(Family::Torus { n: 5, d: 2 })?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..10 {
        let n = 3 + (i % 10);
        let t = random_tree(n, &mut rng)?;
        cases.push((format!("random tree #{i}"), t, FamilyFormula::Tree { n }));
    }
    // Cycles, complete graphs and hypercubes are distance-regular.
    for f in [
        Family::Cycle(7),
        Family::Cycle(10),
        Family::Complete(6),
        Family::Hypercube(3),
    ] {
        let g = f.build()?;
        let wiener = g.distance_matrix()?.wiener();
        let formula = FamilyFormula::DistanceRegular { n: g.n(), wiener };
        cases.push((format!("{f:?} as distance-regular"), g, formula));
    }

    let mut checks = Vec::with_capacity(cases.len());
    for (family, g, formula) in cases {
        let expected = family_index_formula(&formula)?;
        let computed = curvature_index(&g)?.0;
        checks.push(FamilyCheck {
            pass: expected == computed,
            family,
            order: g.n(),
            expected,
            computed,
        });
    }
    let failures = checks.iter().filter(|c| !c.pass).count();
    Ok(FamilyVerification { checks, failures })
}
