//! Exact curvature index computations on graphs.
//!
//! The curvature index of a connected graph is the unique constant `c` for
//! which some unit-sum vector `x` satisfies `D x = c 1`, where `D` is the
//! shortest-path distance matrix (or infinity when every solution of
//! `D x = 1` has zero sum). A graph is *distance exceptional* exactly when
//! its index is zero.
//!
//! The crate is organised as:
//!
//! * [`graph`]: graphs, BFS metrics, family constructors, compositions,
//!   graph6 I/O, embedding verification and construction traces.
//! * [`linalg`]: fraction-free exact linear algebra over the rationals.
//! * [`index`]: the index itself, the modified index, Steinerberger
//!   curvature, closed-form family formulas and composition predictions.
//! * [`construct`]: Egyptian fractions, rational-index realisation,
//!   embedding into distance exceptional supergraphs, basket potentials and
//!   pendant jailbreaks.
//! * [`enumeration`]: small-graph enumeration, graph6 census scans and the
//!   Erdős–Rényi sampling harness.

pub mod construct;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod index;
pub mod linalg;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
pub use index::{IndexValue, Potential};
pub use linalg::{Rat, RatMatrix};
