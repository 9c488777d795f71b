//! Finite-group toolkit: coprime-order subgroup operators `D_m` and
//! `D_{m,n}`, Frobenius and 2-Frobenius detection, the alternating E-series,
//! and a harness that checks their stated properties over a group catalog.

pub mod arith;
pub mod catalog;
pub mod dsub;
pub mod error;
pub mod eseries;
pub mod group;
pub mod report;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use group::{Elem, ElementSet, Group, Subgroup};
