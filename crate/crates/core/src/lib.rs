//! String attractors for prefixes of the fixed points of the generic
//! k-bonacci morphisms `μ_c : i ↦ 0^{c_i}(i+1)`, `k-1 ↦ 0^{c_{k-1}}`.
//!
//! The crate is organised bottom-up:
//!
//! - [`words`]: parameter validation, the morphism, the words `u_n`, their
//!   lengths `U_n` and prefixes of the fixed point `u`.
//! - [`lyndon`]: lexicographic and genealogical orders, (anti-)Lyndon words
//!   and Duval's factorization.
//! - [`numeration`]: the Dumont–Thomas numeration system attached to `μ_c`,
//!   its automaton, greediness and the reduction to a simple Parry number.
//! - [`attractors`]: string attractor verification, the `Γ_n` construction for
//!   every prefix, exact minimal attractors and the profile function.
//!
//! Attractor positions are 1-based everywhere; letters of words are indexed
//! from 0.

pub mod attractors;
mod error;
pub mod lyndon;
pub mod numeration;
pub mod words;

pub use error::{Error, Result};
pub use words::{ParamWord, Word};
