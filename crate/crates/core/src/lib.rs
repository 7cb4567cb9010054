//! Exact Bruhat-order and Kazhdan–Lusztig computations in Coxeter groups.
//!
//! Elements live in an enumerated table owned by a [`CoxeterSystem`]; every
//! other module works with [`Element`] handles into that table. Infinite groups
//! are supported only below an explicit length cap.

pub mod analysis;
pub mod bruhat;
pub mod coxeter;
mod error;
pub mod kl;
pub mod poly;

pub use crate::bruhat::{BruhatEdge, BruhatInterval, GradedPoset, QuotientRestriction};
pub use crate::coxeter::{
    Backend, CoxeterMatrix, CoxeterSystem, Element, GeneratorSet, Side, SystemDescription,
};
pub use crate::error::{Error, Result};
pub use crate::kl::{KlEngine, ParabolicContext, XParam};
pub use crate::poly::IntPolynomial;
