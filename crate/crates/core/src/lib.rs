//! Exact computation in the Hecke group `G5 = <S, T>` with `T = [[1, λ], [0, 1]]`,
//! λ the golden ratio, and its congruence subgroups `G0(τ)`.
//!
//! The crate provides arithmetic in `Z[λ]` ([`ring`]), ideal factorization
//! and residue rings ([`ideals`]), the pseudo-Euclidean reduction that
//! decides membership in `G5` ([`reduction`]), coset enumeration of `G0(τ)`
//! ([`subgroups`]), and the normalizer `N(G0(τ)) = G0(τ/h)` together with
//! its supporting derivations ([`normalizer`]).

pub mod error;
pub mod ideals;
pub mod matrix;
pub mod normalizer;
pub mod reduction;
pub mod ring;
pub mod subgroups;

pub mod cli;
pub mod selftest;

pub use error::{Error, Result};
pub use matrix::{GMatrix, Gen, Word};
pub use ring::{RingElt, UnitRep};
