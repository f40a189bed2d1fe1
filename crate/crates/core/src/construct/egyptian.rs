use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Rat;

/// `r = Σ 1/nᵢ` with every `nᵢ` a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EgyptianDecomposition {
    #[serde(serialize_with = "terms_as_strings")]
    terms: Vec<BigInt>,
}

fn terms_as_strings<S: serde::Serializer>(t: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(t.iter().map(|n| n.to_string()))
}

impl EgyptianDecomposition {
    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total(&self) -> Rat {
        self.terms
            .iter()
            .map(|n| Rat::new(BigInt::one(), n.clone()))
            .sum()
    }
}

/// How to split a rational into unit fractions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EgyptianStrategy {
    /// Fibonacci–Sylvester: repeatedly take the largest unit fraction that
    /// fits. Denominators can grow doubly exponentially.
    Greedy,
    /// Bounded search for the decomposition that minimises `Σ (2nᵢ + 5)`,
    /// the number of vertices the matching `K_{1,1,2n+4}` blocks add to a
    /// coalescence chain. Falls back to the best candidate found when the
    /// search budget runs out.
    #[default]
    Compact,
}

fn check_positive(r: &Rat) -> Result<()> {
    if r.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositive)
    }
}

fn integer_part(r: &Rat) -> (Vec<BigInt>, Rat) {
    let p = r.floor().to_integer();
    let count = p.to_usize().expect("integer part fits in memory");
    (vec![BigInt::one(); count], r - Rat::from_integer(p))
}

/// Greedy decomposition: the integer part as that many 1s, then
/// `n = ⌈1/f⌉` repeatedly on the fractional remainder `f`.
pub fn egyptian_fraction(r: &Rat) -> Result<EgyptianDecomposition> {
    check_positive(r)?;
    let (mut terms, mut f) = integer_part(r);
    while !f.is_zero() {
        let n = f.denom().div_ceil(f.numer());
        f -= Rat::new(BigInt::one(), n.clone());
        terms.push(n);
    }
    Ok(EgyptianDecomposition { terms })
}

pub fn egyptian_fraction_with(r: &Rat, strategy: EgyptianStrategy) -> Result<EgyptianDecomposition> {
    match strategy {
        EgyptianStrategy::Greedy => egyptian_fraction(r),
        EgyptianStrategy::Compact => compact(r),
    }
}

const SEARCH_BUDGET: usize = 200_000;

fn cost(n: &BigInt) -> BigInt {
    n * 2 + 5
}

struct Search {
    best: Option<(BigInt, Vec<BigInt>)>,
    nodes: usize,
}

impl Search {
    fn bound(&self) -> Option<&BigInt> {
        self.best.as_ref().map(|(c, _)| c)
    }

    // Terms are chosen in nondecreasing order, each at least `min`.
    fn go(&mut self, rem: &Rat, min: &BigInt, spent: &BigInt, terms: &mut Vec<BigInt>) {
        if rem.is_zero() {
            if self.bound().is_none_or(|b| spent < b) {
                self.best = Some((spent.clone(), terms.clone()));
            }
            return;
        }
        let mut n = min.max(&rem.denom().div_ceil(rem.numer())).clone();
        loop {
            if self.nodes >= SEARCH_BUDGET {
                return;
            }
            self.nodes += 1;
            // At least ⌈rem·n⌉ more terms, each costing at least 2n + 5.
            let needed = (rem * Rat::from_integer(n.clone())).ceil().to_integer();
            let lower = spent + &needed * cost(&n);
            if self.bound().is_some_and(|b| &lower >= b) {
                return;
            }
            let unit = Rat::new(BigInt::one(), n.clone());
            terms.push(n.clone());
            self.go(&(rem - unit), &n, &(spent + cost(&n)), terms);
            terms.pop();
            n += 1;
        }
    }
}

fn compact(r: &Rat) -> Result<EgyptianDecomposition> {
    check_positive(r)?;
    let (mut terms, f) = integer_part(r);
    if f.is_zero() {
        return Ok(EgyptianDecomposition { terms });
    }
    // Seed the bound with the cheaper of greedy and a/b copies of 1/b.
    let greedy = egyptian_fraction(&f)?.terms;
    let greedy_cost: BigInt = greedy.iter().map(cost).sum();
    let seed = match f.numer().to_usize() {
        Some(a) if BigInt::from(a) * cost(f.denom()) < greedy_cost => vec![f.denom().clone(); a],
        _ => greedy,
    };
    let seed_cost: BigInt = seed.iter().map(cost).sum();
    let mut search = Search {
        best: Some((seed_cost, seed)),
        nodes: 0,
    };
    search.go(&f, &BigInt::one(), &BigInt::zero(), &mut Vec::new());
    terms.extend(search.best.expect("seeded").1);
    Ok(EgyptianDecomposition { terms })
}
