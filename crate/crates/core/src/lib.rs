//! Partial optimality preprocessing for the cubic set partition problem.
//!
//! Given costs on pairs and triples of a finite set, the problem asks for a
//! partition minimizing the summed costs of co-clustered pairs and triples.
//! This crate finds variables whose optimal values can be fixed in advance,
//! contracts and decomposes instances accordingly, and ships the generators and
//! experiment driver for two synthetic instance families.

pub mod core;
pub mod criteria;
pub mod datasets;
pub mod engine;
pub mod experiment;
pub mod error;
pub mod maps;
pub mod mincut;

pub use crate::core::{CostFunction, Labeling, Partition};
pub use crate::error::{Error, Result};
