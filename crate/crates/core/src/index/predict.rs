use num_traits::One;
use serde::Serialize;

use super::IndexValue;
use crate::linalg::{int, Rat};

/// Index of `G □ H` from the factor indices.
pub fn predict_product(a: &IndexValue, b: &IndexValue) -> IndexValue {
    a.plus(b)
}

/// Index of any coalescence of `G` and `H` from the factor indices.
pub fn predict_coalesce(a: &IndexValue, b: &IndexValue) -> IndexValue {
    a.plus(b)
}

/// Which case of the join law applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JoinBranch {
    /// Both finite with `a + b ≠ 2`: `(ab − 1)/(a + b − 2)`.
    Generic,
    /// `a = b = 1`.
    BothOne,
    /// Both finite, `a + b = 2`, not both 1.
    SumTwo,
    /// Only the left side is infinite; the right value carries over.
    LeftInfinite,
    RightInfinite,
    BothInfinite,
}

pub fn join_branch(a: &IndexValue, b: &IndexValue) -> JoinBranch {
    match (a, b) {
        (IndexValue::Infinite, IndexValue::Infinite) => JoinBranch::BothInfinite,
        (IndexValue::Infinite, _) => JoinBranch::LeftInfinite,
        (_, IndexValue::Infinite) => JoinBranch::RightInfinite,
        (IndexValue::Finite(x), IndexValue::Finite(y)) => {
            if x.is_one() && y.is_one() {
                JoinBranch::BothOne
            } else if x + y == int(2) {
                JoinBranch::SumTwo
            } else {
                JoinBranch::Generic
            }
        }
    }
}

/// Index of `G ∨ H` from the modified indices of `G` and `H`.
pub fn predict_join(a: &IndexValue, b: &IndexValue) -> (IndexValue, JoinBranch) {
    let branch = join_branch(a, b);
    let value = match (branch, a, b) {
        (JoinBranch::Generic, IndexValue::Finite(x), IndexValue::Finite(y)) => {
            IndexValue::Finite((x * y - Rat::one()) / (x + y - int(2)))
        }
        (JoinBranch::BothOne, ..) => IndexValue::Finite(Rat::one()),
        (JoinBranch::LeftInfinite, _, v) | (JoinBranch::RightInfinite, v, _) => v.clone(),
        _ => IndexValue::Infinite,
    };
    (value, branch)
}
