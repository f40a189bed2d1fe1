use num_bigint::BigInt;
use num_traits::Pow;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::index::Potential;
use crate::linalg::Rat;

/// `a⁽ᵐ⁾ᵢ = ((−3)^{i−1} + (−3)^{m−i}) / 2` for `i = 1..m`.
pub fn basket_block(m: usize) -> Vec<Rat> {
    let p = |e: usize| Pow::pow(BigInt::from(-3), e as u32);
    (1..=m)
        .map(|i| Rat::new(p(i - 1) + p(m - i), BigInt::from(2)))
        .collect()
}

/// Exact potential of `basket(k)`, verified against its distance matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasketPotential {
    pub k: usize,
    pub potential: Potential,
}

impl BasketPotential {
    pub fn x(&self) -> &[Rat] {
        self.potential.x()
    }

    pub fn iota(&self) -> &Rat {
        self.potential.constant()
    }
}

/// The potential `(a⁽ᵏ⁾, a⁽ᵏ⁻¹⁾, a⁽ᵏ⁻¹⁾, a⁽ᵏ⁻¹⁾)` in the vertex order of
/// [`Family::Basket`]: the `k` path vertices from the first shared
/// endpoint, then the three blocks of `k − 1` interior vertices.
pub fn basket_potential(k: usize) -> Result<BasketPotential> {
    if k < 3 {
        return Err(Error::InvalidParameter("basket needs k >= 3".into()));
    }
    let g: Graph = Family::Basket(k).build()?;
    let mut x = basket_block(k);
    let inner = basket_block(k - 1);
    for _ in 0..3 {
        x.extend(inner.iter().cloned());
    }
    let kk = k as i64;
    let iota = Rat::new(
        Pow::pow(BigInt::from(-3), k as u32) + BigInt::from(4 * kk - 1),
        BigInt::from(8),
    );
    let d = g.distance_matrix()?.to_rat_matrix();
    Ok(BasketPotential {
        k,
        potential: Potential::new(&d, x, iota)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn basket_three() {
        assert_eq!(basket_block(3), vec![int(5), int(-3), int(5)]);
        assert_eq!(basket_block(2), vec![int(-1), int(-1)]);
        let b = basket_potential(3).unwrap();
        assert_eq!(b.iota(), &int(-2));
        assert_eq!(b.x().len(), 9);
    }

    #[test]
    fn certificates_and_palindromes() {
        for k in 3..=9 {
            let b = basket_potential(k).unwrap();
            assert_eq!(b.x().len(), 4 * k - 3);
            let a = basket_block(k);
            let mut rev = a.clone();
            rev.reverse();
            assert_eq!(a, rev);
        }
        assert_eq!(basket_potential(4).unwrap().iota(), &int(12));
        assert!(basket_potential(2).is_err());
    }
}
