//! Exact rational linear algebra.
//!
//! Everything here is exact: matrices hold [`Rat`] entries and every solve
//! goes through fraction-free (Bareiss) Gauss–Jordan elimination over the
//! integers after clearing row denominators. Pivots are chosen as the first
//! nonzero entry in column order so witnesses are reproducible.

mod elimination;
mod matrix;
mod rat;
mod solve;

pub use matrix::{dot, sum, RatMatrix, RatVector};
pub use rat::{format_rat, int, parse_rat, rat, rat_to_f64, Rat};
pub use solve::{kernel_basis, min_norm_solve, rank, solve, solve_affine_index};

pub(crate) use rat::{serde_rat, serde_rat_vec};
pub(crate) use solve::affine_index_from_int_rows;
