//! Hecke insertion for words, K-theoretic jeu de taquin for increasing
//! tableaux, and the Plancherel-Hecke measure on Young diagrams.
//!
//! A word `w` of length `n` over `{1, ..., q}` is sent by Hecke insertion to
//! a pair `(P, Q)` of an increasing tableau and a standard set-valued
//! tableau of a common shape. The first row of that shape is the longest
//! strictly increasing subsequence of `w` and the first column the longest
//! strictly decreasing one. Pushing the uniform measure on words forward
//! through the shape map gives the Plancherel-Hecke measure
//! `d^λ(q) e^λ(n) / q^n`.

pub mod asymptotics;
pub mod counting;
pub mod diagram;
pub mod error;
pub mod insertion;
pub mod kjdt;
pub mod measures;
pub mod output;
pub mod patience;
pub mod permutation;
pub mod rng;
pub mod tableau;
pub mod verify;
pub mod word;

pub use diagram::{staircase, Cell, YoungDiagram};
pub use error::{Error, Result};
pub use insertion::{hecke, hecke_insert, hecke_inverse, heckeshape, reverse_hecke, HeckePair};
pub use permutation::{coxeter_length, hecke_product, longest_element, Permutation};
pub use tableau::{IncreasingTableau, SemistandardTableau, SetValuedTableau, SkewTableau};
pub use word::{lds, lis, lis_end_positions, random_word, Word};
