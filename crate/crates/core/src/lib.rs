//! τ-tilting finiteness for finite-dimensional bound quiver algebras.
//!
//! The crate builds algebras from quivers with relations (or from abstract
//! structure constants), enumerates two-term silting complexes by iterated
//! irreducible mutation and decides τ-tilting finiteness with replayable
//! certificates. It also constructs 0-Hecke and 0-Schur algebras.

pub mod algebra;
pub mod error;
pub mod families;
pub mod hecke;
pub mod linalg;
pub mod presentation;
pub mod projective;
pub mod rep;
pub mod silting;
pub mod verdict;

pub use error::{Error, Result};
