//! Fraction-free Gauss–Jordan elimination.
//!
//! After `k` pivot steps every pivot row carries the same pivot value `d_k`
//! (the determinant of the pivot submatrix) and every entry is an integer
//! minor, so each update `(p·a − f·b) / prev` divides exactly. Elimination
//! runs in `i128` first and restarts in `BigInt` on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

trait Scalar: Clone {
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `(p·a − f·b) / prev`, `None` on overflow.
    fn cross(p: &Self, a: &Self, f: &Self, b: &Self, prev: &Self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Scalar for i128 {
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross(p: &i128, a: &i128, f: &i128, b: &i128, prev: &i128) -> Option<i128> {
        let v = p.checked_mul(*a)?.checked_sub(f.checked_mul(*b)?)?;
        assert!(v % prev == 0, "inexact fraction-free division");
        Some(v / prev)
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Scalar for BigInt {
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(p: &BigInt, a: &BigInt, f: &BigInt, b: &BigInt, prev: &BigInt) -> Option<BigInt> {
        let v = p * a - f * b;
        if prev.is_one() {
            return Some(v);
        }
        let (q, r) = v.div_rem(prev);
        assert!(Zero::is_zero(&r), "inexact fraction-free division");
        Some(q)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// Reduced row echelon form scaled by the common pivot value `det`.
///
/// Rows `0..pivots.len()` are pivot rows; row `i` has value `det` in column
/// `pivots[i]` and zero in every other pivot column. Remaining rows are zero
/// on the coefficient columns.
#[derive(Debug, Clone)]
pub(crate) struct Reduced {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub det: BigInt,
}

impl Reduced {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Eliminates on the first `coeff_cols` columns; later columns are carried
/// along as right-hand sides.
pub(crate) fn reduce(rows: Vec<Vec<BigInt>>, coeff_cols: usize) -> Reduced {
    let small: Option<Vec<Vec<i128>>> = rows
        .iter()
        .map(|r| r.iter().map(ToPrimitive::to_i128).collect())
        .collect();
    if let Some(small) = small {
        if let Some(red) = reduce_generic(small, coeff_cols) {
            return red;
        }
    }
    reduce_generic(rows, coeff_cols).expect("BigInt elimination cannot overflow")
}

fn reduce_generic<T: Scalar>(mut m: Vec<Vec<T>>, coeff_cols: usize) -> Option<Reduced> {
    let nrows = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..coeff_cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let prow = m[r].clone();
        let pv = prow[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            for j in 0..width {
                if row[j].is_zero() && (f.is_zero() || prow[j].is_zero()) {
                    continue;
                }
                row[j] = T::cross(&pv, &row[j], &f, &prow[j], &prev)?;
            }
        }
        prev = pv;
        pivots.push(c);
        r += 1;
    }
    Some(Reduced {
        rows: m
            .into_iter()
            .map(|row| row.into_iter().map(T::into_big).collect())
            .collect(),
        pivots,
        det: prev.into_big(),
    })
}
