//! Exact invariants of finite posets and their incidence algebras.
//!
//! The crate computes, with exact arithmetic throughout:
//! - order complexes, integer boundary matrices and integral homology;
//! - multiplicative cochain calculus with values in the units of F_q or Q,
//!   including cocycle tests, coboundary solving and the structure of
//!   H^n(Delta(P), K*);
//! - deformations of incidence algebras, their triviality, isomorphism and
//!   recognition from structure constants;
//! - the complete classification of thin representations together with
//!   tensor structure, accessibility chains and submodule lattices;
//! - the canonical form of square matrices under diagonal conjugation.

pub mod canon;
pub mod cocycle;
pub mod complex;
pub mod deform;
pub mod error;
pub mod field;
pub mod intmat;
pub mod linalg;
pub mod poset;
pub mod tensor;
pub mod thin;

pub use error::{Error, Result};
