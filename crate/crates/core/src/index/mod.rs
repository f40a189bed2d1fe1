//! The curvature index and everything computed from it.

mod curvature;
mod families_check;
mod formulas;
mod potential;
mod predict;
mod spectral;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{format_rat, parse_rat, rat_to_f64, Rat};

pub use curvature::{
    curvature_index, index_via_pseudoinverse, is_distance_exceptional, modified_distance_matrix,
    modified_index, steinerberger_curvature, wiener_index, DxCertificate, DxVerdict,
};
pub use families_check::{verify_families, FamilyCheck, FamilyVerification};
pub use formulas::{family_index_formula, FamilyFormula};
pub use potential::{coalesce_potential, pendant_potential_update, product_potential, Potential};
pub use predict::{join_branch, predict_coalesce, predict_join, predict_product, JoinBranch};
pub use spectral::{spectral_cross_check, SpectralCheck, SpectralOptions, SpectralVerdict};

/// A curvature index: a finite rational or the distinguished value `∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IndexValue {
    Finite(Rat),
    Infinite,
}

impl IndexValue {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            IndexValue::Finite(r) => Some(r),
            IndexValue::Infinite => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.finite().is_some_and(Zero::is_zero)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, IndexValue::Infinite)
    }

    pub fn to_f64(&self) -> f64 {
        self.finite().map_or(f64::INFINITY, rat_to_f64)
    }

    /// Extended-real sum with `∞` absorbing.
    pub fn plus(&self, other: &IndexValue) -> IndexValue {
        match (self, other) {
            (IndexValue::Finite(a), IndexValue::Finite(b)) => IndexValue::Finite(a + b),
            _ => IndexValue::Infinite,
        }
    }
}

impl From<Rat> for IndexValue {
    fn from(r: Rat) -> Self {
        IndexValue::Finite(r)
    }
}

/// Finite values in numeric order, `∞` last.
impl Ord for IndexValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (IndexValue::Finite(a), IndexValue::Finite(b)) => a.cmp(b),
            (IndexValue::Finite(_), IndexValue::Infinite) => Ordering::Less,
            (IndexValue::Infinite, IndexValue::Finite(_)) => Ordering::Greater,
            (IndexValue::Infinite, IndexValue::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for IndexValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Finite(r) => f.write_str(&format_rat(r)),
            IndexValue::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for IndexValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" => Ok(IndexValue::Infinite),
            t => parse_rat(t).map(IndexValue::Finite),
        }
    }
}

impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IndexValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(de::Error::custom)
    }
}
