use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{serde_rat, serde_rat_vec, sum, Rat, RatMatrix};

/// A verified certificate for an index value: a unit-sum vector `x` with
/// `D x = c·1`. Once such an `x` exists, `c` is the index of `D`.
///
/// The constructors check both identities exactly and refuse anything else,
/// so holding a `Potential` means the equations hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Potential {
    #[serde(with = "serde_rat_vec")]
    x: Vec<Rat>,
    #[serde(with = "serde_rat")]
    sum: Rat,
    #[serde(with = "serde_rat")]
    constant: Rat,
}

impl Potential {
    /// Checks `d x = constant·1` and `1ᵀx = 1` against an explicit matrix.
    pub fn new(d: &RatMatrix, x: Vec<Rat>, constant: Rat) -> Result<Self> {
        let dx = d.mul_vec(&x)?;
        if let Some(i) = dx.iter().position(|v| *v != constant) {
            return Err(Error::CertificateViolation(format!(
                "row {i} of D·x is {} instead of {}",
                dx[i], constant
            )));
        }
        Self::checked_sum(x, constant)
    }

    /// Same check with the distance matrix of `g` generated row by row, so
    /// graphs far too large for a dense matrix can still be certified.
    pub fn for_graph(g: &Graph, x: Vec<Rat>, constant: Rat) -> Result<Self> {
        if x.len() != g.n() {
            return Err(Error::DimensionMismatch {
                expected: g.n(),
                got: x.len(),
            });
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        // Work with integers: X = L·x where L clears every denominator.
        let lcm = x.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let scaled: Vec<BigInt> = x.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
        let target = &constant * Rat::from_integer(lcm.clone());
        if !target.is_integer() {
            return Err(Error::CertificateViolation(
                "constant is not reachable by an integer row sum".into(),
            ));
        }
        let target = target.to_integer();
        let bad = (0..g.n()).into_par_iter().find_any(|&s| {
            let dist = g.bfs(s);
            let mut layers: Vec<BigInt> = Vec::new();
            for (v, d) in dist.iter().enumerate() {
                let d = d.expect("connected") as usize;
                if layers.len() <= d {
                    layers.resize(d + 1, BigInt::zero());
                }
                layers[d] += &scaled[v];
            }
            let row: BigInt = layers
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, s)| s * BigInt::from(d))
                .sum();
            row != target
        });
        if let Some(s) = bad {
            return Err(Error::CertificateViolation(format!(
                "row {s} of D·x differs from {constant}"
            )));
        }
        Self::checked_sum(x, constant)
    }

    fn checked_sum(x: Vec<Rat>, constant: Rat) -> Result<Self> {
        let total = sum(&x);
        if !total.is_one() {
            return Err(Error::CertificateViolation(format!(
                "entries sum to {total} instead of 1"
            )));
        }
        Ok(Potential {
            x,
            sum: total,
            constant,
        })
    }

    pub fn x(&self) -> &[Rat] {
        &self.x
    }

    pub fn sum(&self) -> &Rat {
        &self.sum
    }

    pub fn constant(&self) -> &Rat {
        &self.constant
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn into_parts(self) -> (Vec<Rat>, Rat) {
        (self.x, self.constant)
    }
}

/// Potential vector for `coalesce(G, u, H, v)` in that function's vertex
/// order, from unit-sum potentials of the two factors.
pub fn coalesce_potential(xg: &[Rat], u: usize, xh: &[Rat], v: usize) -> Result<Vec<Rat>> {
    if u >= xg.len() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: xg.len(),
        });
    }
    if v >= xh.len() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: xh.len(),
        });
    }
    let mut out = Vec::with_capacity(xg.len() + xh.len() - 1);
    out.push(&xg[u] + &xh[v] - Rat::one());
    out.extend(
        xg.iter()
            .enumerate()
            .filter(|&(i, _)| i != u)
            .map(|(_, r)| r.clone()),
    );
    out.extend(
        xh.iter()
            .enumerate()
            .filter(|&(i, _)| i != v)
            .map(|(_, r)| r.clone()),
    );
    Ok(out)
}

/// Potential vector for the Cartesian product in row-major order.
pub fn product_potential(xg: &[Rat], xh: &[Rat]) -> Vec<Rat> {
    xg.iter().flat_map(|a| xh.iter().map(move |b| a * b)).collect()
}

/// Updates a potential of `G` to one of `G` with a pendant vertex hung at
/// `u`; `extended` is that larger graph (new vertex last). The index grows
/// by exactly one half.
pub fn pendant_potential_update(old: &Potential, u: usize, extended: &Graph) -> Result<Potential> {
    let n = old.len();
    if u >= n {
        return Err(Error::VertexOutOfRange { vertex: u, n });
    }
    if extended.n() != n + 1 || !extended.has_edge(u, n) || extended.degree(n) != 1 {
        return Err(Error::InvalidParameter(format!(
            "graph is not the old one with a pendant at {u}"
        )));
    }
    let half = Rat::new(1.into(), 2.into());
    let mut x = old.x().to_vec();
    x[u] -= &half;
    x.push(half.clone());
    Potential::for_graph(extended, x, old.constant() + half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{add_pendant, Family};
    use crate::linalg::{int, rat};

    fn halves(n: usize) -> Vec<Rat> {
        vec![rat(1, n as i64); n]
    }

    #[test]
    fn cycle_potential_is_uniform() {
        let c6 = Family::Cycle(6).build().unwrap();
        let p = Potential::for_graph(&c6, halves(6), rat(3, 2)).unwrap();
        assert_eq!(p.constant(), &rat(3, 2));
        let d = c6.distance_matrix().unwrap().to_rat_matrix();
        assert_eq!(Potential::new(&d, halves(6), rat(3, 2)).unwrap(), p);
    }

    #[test]
    fn wrong_constant_is_rejected() {
        let c6 = Family::Cycle(6).build().unwrap();
        assert!(matches!(
            Potential::for_graph(&c6, halves(6), int(1)),
            Err(Error::CertificateViolation(_))
        ));
        assert!(matches!(
            Potential::for_graph(&c6, vec![rat(1, 3); 6], int(3)),
            Err(Error::CertificateViolation(_))
        ));
    }

    #[test]
    fn pendant_adds_a_half() {
        let k3 = Family::Complete(3).build().unwrap();
        let p = Potential::for_graph(&k3, vec![rat(1, 3); 3], rat(2, 3)).unwrap();
        let g = add_pendant(&k3, 1).unwrap();
        let q = pendant_potential_update(&p, 1, &g).unwrap();
        assert_eq!(q.constant(), &rat(7, 6));
        assert!(pendant_potential_update(&p, 1, &k3).is_err());
    }

    #[test]
    fn product_and_coalesce_vectors() {
        let x = halves(2);
        assert_eq!(product_potential(&x, &x), vec![rat(1, 4); 4]);
        let c = coalesce_potential(&x, 0, &x, 1).unwrap();
        assert_eq!(c, vec![int(0), rat(1, 2), rat(1, 2)]);
        assert!(coalesce_potential(&x, 2, &x, 0).is_err());
    }
}
