//! Minimal quantum degrees for products of Schubert classes on type-A
//! partial flag varieties.
//!
//! Elements of the parabolic quotient `W^P` are handled as [`CosetRep`]s and
//! drawn as [`MayaDiagram`]s. The minimal degree of `q` in `σ^v ⋆ σ_w` is
//! computed by [`greedy_min_degree`], which repeatedly applies generalized
//! rim hooks chosen from the Bruhat-incompatible rows of `M^v` against `M^w`.
//! The [`oracle`] module holds brute-force chain searches used to check it.
//!
//! ```
//! use qmindeg::{FlagShape, CosetRep, greedy_min_degree};
//!
//! let shape: FlagShape = "1,3,5,7,9/13".parse().unwrap();
//! let v = CosetRep::parse(&shape, "2|3,8|10,13|9,11|1,5").unwrap();
//! let w = CosetRep::parse(&shape, "1|9,10|5,11|6,7|2,3").unwrap();
//! let (degree, trace) = greedy_min_degree(&v, &w).unwrap();
//! assert_eq!(degree.to_string(), "0,2,1,1,0");
//! assert_eq!(degree.exponent_form(), "0^1 2^1 1^2 0^1");
//! assert_eq!(trace.steps.len(), 2);
//! ```

pub mod cli;
pub mod error;
pub mod maya;
pub mod oracle;
pub mod qdegree;
pub mod weyl;

pub use error::{Error, Result};
pub use maya::{ColumnSet, MayaDiagram, RimHookSpec};
pub use qdegree::{
    graded_degree, greedy_min_degree, lower_bound_vector, project, projection_degree,
    root_degree, step_degree, ChainStep, ChainTrace, DegreeVector,
};
pub use weyl::{CosetRep, FlagShape, Permutation};
