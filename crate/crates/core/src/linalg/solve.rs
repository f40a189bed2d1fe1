use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::elimination::{reduce, Reduced};
use super::{dot, sum, Rat, RatMatrix, RatVector};
use crate::error::{Error, Result};
use crate::index::{IndexValue, Potential};

/// Scales each row by the lcm of its denominators so it becomes integral.
fn integer_rows(a: &RatMatrix, rhs: Option<&[Rat]>) -> Vec<Vec<BigInt>> {
    (0..a.rows())
        .map(|i| {
            let mut row: Vec<&Rat> = a.row(i).iter().collect();
            if let Some(b) = rhs {
                row.push(&b[i]);
            }
            let lcm = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect()
        })
        .collect()
}

fn particular_solution(red: &Reduced, n: usize, rhs_col: usize) -> Option<RatVector> {
    let rank = red.rank();
    if red.rows[rank..].iter().any(|r| !r[rhs_col].is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &c) in red.pivots.iter().enumerate() {
        x[c] = Rat::new(red.rows[i][rhs_col].clone(), red.det.clone());
    }
    Some(x)
}

/// Some exact solution of `A x = b`, or `None` when the system is
/// inconsistent. Free variables are set to zero.
pub fn solve(a: &RatMatrix, b: &[Rat]) -> Result<Option<RatVector>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            got: b.len(),
        });
    }
    let red = reduce(integer_rows(a, Some(b)), a.cols());
    Ok(particular_solution(&red, a.cols(), a.cols()))
}

pub fn rank(a: &RatMatrix) -> usize {
    reduce(integer_rows(a, None), a.cols()).rank()
}

/// Basis of the null space. Each vector is a primitive integer vector
/// (entries coprime) with `1` in its free coordinate direction scaled up.
pub fn kernel_basis(a: &RatMatrix) -> Result<Vec<RatVector>> {
    let n = a.cols();
    let red = reduce(integer_rows(a, None), n);
    let is_pivot = {
        let mut v = vec![false; n];
        for &c in &red.pivots {
            v[c] = true;
        }
        v
    };
    let basis = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigInt::zero(); n];
            v[f] = red.det.clone();
            for (i, &c) in red.pivots.iter().enumerate() {
                v[c] = -red.rows[i][f].clone();
            }
            let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            let sign = if v[f].is_negative() {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            v.into_iter().map(|x| Rat::from_integer(x / &g * &sign)).collect()
        })
        .collect();
    Ok(basis)
}

/// The solution of `A x = b` orthogonal to `ker(A)`, i.e. `A⁺ b` for
/// symmetric `A`. `None` when `b ∉ range(A)`.
pub fn min_norm_solve(a: &RatMatrix, b: &[Rat]) -> Result<Option<RatVector>> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let Some(x0) = solve(a, b)? else {
        return Ok(None);
    };
    let kernel = kernel_basis(a)?;
    if kernel.is_empty() {
        return Ok(Some(x0));
    }
    // Solve the Gram system (KᵀK) c = Kᵀ x0 and subtract K c.
    let r = kernel.len();
    let gram = RatMatrix::from_fn(r, r, |i, j| dot(&kernel[i], &kernel[j]));
    let rhs: RatVector = kernel.iter().map(|k| dot(k, &x0)).collect();
    let coeffs = solve(&gram, &rhs)?.expect("Gram matrix of a basis is nonsingular");
    let mut x = x0;
    for (k, c) in kernel.iter().zip(&coeffs) {
        if c.is_zero() {
            continue;
        }
        for (xi, ki) in x.iter_mut().zip(k) {
            *xi -= c * ki;
        }
    }
    Ok(Some(x))
}

/// Solves the bordered system `[[D, −1], [1ᵀ, 0]] (x, c) = (0, 1)`.
///
/// A solution gives a unit-sum `x` with `D x = c 1`; symmetry of `D` makes
/// `c` unique. If `c ≠ 0`, `x / c` is a curvature potential with nonzero
/// sum; if `c = 0`, `x` is a unit-sum kernel vector (the exceptional case).
/// Inconsistency means every solution of `D x = 1` has zero sum, which is
/// the `Infinite` convention.
pub fn solve_affine_index(d: &RatMatrix) -> Result<(IndexValue, Option<Potential>)> {
    if !d.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    affine_index_from_int_rows(d, integer_rows(d, None))
}

pub(crate) fn affine_index_from_int_rows(
    d: &RatMatrix,
    rows: Vec<Vec<BigInt>>,
) -> Result<(IndexValue, Option<Potential>)> {
    let n = rows.len();
    let mut bordered: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|mut r| {
            r.push(-BigInt::one());
            r.push(BigInt::zero());
            r
        })
        .collect();
    let mut last = vec![BigInt::one(); n];
    last.push(BigInt::zero());
    last.push(BigInt::one());
    bordered.push(last);

    let red = reduce(bordered, n + 1);
    let Some(sol) = particular_solution(&red, n + 1, n + 1) else {
        return Ok((IndexValue::Infinite, None));
    };
    let c = sol[n].clone();
    let x = sol[..n].to_vec();
    debug_assert!(sum(&x).is_one());
    let potential = Potential::new(d, x, c.clone())?;
    Ok((IndexValue::Finite(c), Some(potential)))
}
