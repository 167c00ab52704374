//! Type-A Weyl group machinery: flag shapes, permutations in one-line
//! notation, minimal coset representatives of `S_n / W_P` and the Hecke
//! (0-Hecke / Demazure) product.

mod coset;
mod enumerate;
mod hecke;
mod perm;
mod shape;

pub use coset::CosetRep;
pub use enumerate::CosetIter;
pub use hecke::{hecke_step, reflection_word};
pub use perm::{bruhat_leq_full, Permutation};
pub use shape::{FlagShape, MAX_N};
