//! Exact-arithmetic engine for Hochschild and cyclic cohomology of function
//! algebras on finite groups, together with the ℤ-line (geometric-series
//! twist) model and a crossed-product family.
//!
//! Everything is computed over cyclotomic number fields with `BigRational`
//! coefficients — no floating point anywhere, so equality of cohomology
//! dimensions and cocycle identities is decidable on the nose.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod scalar;
pub mod group;
pub mod mha;
pub mod modpair;
pub mod cochain;
pub mod cocyclic;
pub mod zline;
pub mod crossed;

pub use scalar::{CycloField, CycloScalar, ScalarMatrix};
pub use group::{Character, GroupTable};
