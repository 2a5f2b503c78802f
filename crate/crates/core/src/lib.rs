//! Twisted Alexander polynomials of links with exact arithmetic, and
//! verification of the twisted Torres condition.
//!
//! The pipeline runs PD diagram → Wirtinger presentation → representation →
//! Alexander matrix → Wada invariant; [`torres`] compares a link with the
//! link obtained by deleting one component.

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod free_group;
pub mod presentation;
pub mod random;
pub mod report;
pub mod representation;
pub mod selftest;
pub mod torres;
pub mod wada;

pub use error::{AlgebraError, Error, Result};
