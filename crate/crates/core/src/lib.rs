//! Exact root-system and representation computations for building simple
//! Lie algebras one Dynkin node at a time.
//!
//! The pipeline runs bottom-up: [`root_system`] generates roots from a
//! Cartan matrix, [`rep_theory`] computes dimensions and weight
//! multiplicities, [`tensor_ops`] decomposes products, [`deletion`] grades
//! an algebra by removing one node, and [`induction`] searches for graded
//! chains that could come from a larger algebra.

pub mod cli;
pub mod deletion;
pub mod error;
pub mod induction;
pub mod rep_theory;
pub mod root_system;
mod serde_util;
pub mod tensor_ops;

pub use error::{LieError, Result};
pub use root_system::{parse_dynkin, CartanMatrix, DynkinType, Family, Root, RootSystem, Weight};
