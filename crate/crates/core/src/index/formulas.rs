use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::IndexValue;
use crate::error::{Error, Result};
use crate::graph::Family;
use crate::linalg::{int, rat, Rat};

/// Graph classes with a closed-form index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyFormula {
    /// Any tree on `n` vertices.
    Tree {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// `d`-fold Cartesian power of `C_n`.
    Torus {
        n: usize,
        d: usize,
    },
    Hypercube {
        d: usize,
    },
    /// `P_n □ P_m`.
    Grid {
        n: usize,
        m: usize,
    },
    Complete {
        n: usize,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    Basket {
        k: usize,
    },
    /// Any distance-regular graph, from its order and Wiener index.
    DistanceRegular {
        n: usize,
        wiener: u64,
    },
}

impl FamilyFormula {
    /// The formula matching a constructible family, when there is one.
    pub fn for_family(f: &Family) -> Option<FamilyFormula> {
        Some(match f {
            Family::Path(k) => FamilyFormula::Tree { n: *k },
            Family::Cycle(n) => FamilyFormula::Cycle { n: *n },
            Family::Torus { n, d } => FamilyFormula::Torus { n: *n, d: *d },
            Family::Hypercube(d) => FamilyFormula::Hypercube { d: *d },
            Family::Grid(n, m) => FamilyFormula::Grid { n: *n, m: *m },
            Family::Complete(n) => FamilyFormula::Complete { n: *n },
            Family::CompleteMultipartite(p) => FamilyFormula::CompleteMultipartite { parts: p.clone() },
            Family::Basket(k) => FamilyFormula::Basket { k: *k },
            Family::Empty(_) => return None,
        })
    }
}

fn cycle_index(n: usize) -> Rat {
    let n = n as i64;
    if n % 2 == 0 {
        rat(n, 4)
    } else {
        rat(n * n - 1, 4 * n)
    }
}

fn bad(msg: &str) -> Error {
    Error::InvalidParameter(msg.to_string())
}

pub fn family_index_formula(f: &FamilyFormula) -> Result<IndexValue> {
    let v = match f {
        FamilyFormula::Tree { n } if *n >= 1 => rat(*n as i64 - 1, 2),
        FamilyFormula::Tree { .. } => return Err(bad("tree needs n >= 1")),
        FamilyFormula::Cycle { n } if *n >= 3 => cycle_index(*n),
        FamilyFormula::Cycle { .. } => return Err(bad("cycle needs n >= 3")),
        FamilyFormula::Torus { n, d } if *n >= 3 && *d >= 1 => cycle_index(*n) * int(*d as i64),
        FamilyFormula::Torus { .. } => return Err(bad("torus needs n >= 3 and d >= 1")),
        FamilyFormula::Hypercube { d } => rat(*d as i64, 2),
        FamilyFormula::Grid { n, m } if *n >= 1 && *m >= 1 => rat(*n as i64 + *m as i64 - 2, 2),
        FamilyFormula::Grid { .. } => return Err(bad("grid needs n, m >= 1")),
        FamilyFormula::Complete { n } if *n >= 1 => rat(*n as i64 - 1, *n as i64),
        FamilyFormula::Complete { .. } => return Err(bad("complete graph needs n >= 1")),
        FamilyFormula::CompleteMultipartite { parts } => return multipartite(parts),
        FamilyFormula::Basket { k } if *k >= 3 => {
            let k = *k as i64;
            let top = Pow::pow(BigInt::from(-3), k as u32) + BigInt::from(4 * k - 1);
            Rat::new(top, BigInt::from(8))
        }
        FamilyFormula::Basket { .. } => return Err(bad("basket needs k >= 3")),
        FamilyFormula::DistanceRegular { n, wiener } if *n >= 1 => {
            Rat::new(BigInt::from(2 * wiener), BigInt::from(n * n))
        }
        FamilyFormula::DistanceRegular { .. } => return Err(bad("distance-regular graph needs n >= 1")),
    };
    Ok(IndexValue::Finite(v))
}

fn multipartite(parts: &[usize]) -> Result<IndexValue> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(bad(
            "complete multipartite graph needs at least two nonempty parts",
        ));
    }
    if parts.contains(&2) {
        return Ok(IndexValue::Finite(Rat::one()));
    }
    let s: Rat = parts.iter().map(|&a| rat(a as i64, a as i64 - 2)).sum();
    if s.is_zero() {
        Ok(IndexValue::Infinite)
    } else {
        Ok(IndexValue::Finite(Rat::one() + s.recip()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(x: FamilyFormula) -> IndexValue {
        family_index_formula(&x).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(f(FamilyFormula::Cycle { n: 5 }), IndexValue::Finite(rat(6, 5)));
        assert_eq!(f(FamilyFormula::Basket { k: 3 }), IndexValue::Finite(int(-2)));
        assert_eq!(f(FamilyFormula::Basket { k: 4 }), IndexValue::Finite(int(12)));
        assert_eq!(f(FamilyFormula::Hypercube { d: 4 }), IndexValue::Finite(int(2)));
        assert_eq!(
            f(FamilyFormula::CompleteMultipartite { parts: vec![1, 1, 6] }),
            IndexValue::Finite(int(-1))
        );
        assert_eq!(
            f(FamilyFormula::CompleteMultipartite { parts: vec![1, 1, 4] }),
            IndexValue::Infinite
        );
        assert_eq!(
            f(FamilyFormula::DistanceRegular { n: 5, wiener: 15 }),
            f(FamilyFormula::Cycle { n: 5 })
        );
    }

    #[test]
    fn invalid_parameters() {
        assert!(family_index_formula(&FamilyFormula::Cycle { n: 2 }).is_err());
        assert!(family_index_formula(&FamilyFormula::Basket { k: 2 }).is_err());
        assert!(family_index_formula(&FamilyFormula::CompleteMultipartite { parts: vec![3] }).is_err());
    }
}
