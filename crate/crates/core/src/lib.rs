//! Bohr-set containment certificates for triple products `A B B^-1` on
//! finite groups.
//!
//! The pipeline computes the large spectrum of the uniform measure on `A`,
//! picks a base point `a_o` from the correlation functional of `u_B`, and
//! emits a [`Certificate`](engine::Certificate) claiming
//! `a_o U_{S, eps} ⊆ A B B^-1` (or the level-set and unitary variants). Every
//! certificate is checked by the brute-force [`oracle`], which uses group
//! arithmetic and counting only.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod action;
pub mod bohr;
pub mod cli;
pub mod density;
pub mod engine;
pub mod error;
pub mod groups;
pub mod instances;
pub mod matrix;
pub mod oracle;
pub mod repr;
pub mod selftest;
pub mod sweep;

pub use error::{Error, Result};
