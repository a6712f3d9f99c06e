//! Exact-arithmetic generalized number lattices on labeled finite ground sets.
//!
//! A number lattice is the set of integral combinations of finitely many
//! rational row vectors on a finite column set; a generalized number lattice
//! (GNL) adds a vector space part. This crate builds GNLs, dualizes them,
//! links them through matched and skewed composition, reduces their bases
//! (LLL, swap-free dual reduction, linked reductions through regular vector
//! spaces) and answers closest/shortest-vector questions with brute-force
//! oracles that keep every approximation claim testable at desk scale.
//!
//! Start with the runnable examples (`cargo run --example <name>`); the
//! `latlink` binary exposes the same operations on JSON files.

pub mod compose;
pub mod cvp;
pub mod dsl;
pub mod error;
pub mod files;
pub mod gnl;
pub mod ground;
pub mod hnf;
pub mod rat;
pub mod reduce;
pub mod regular;
pub mod selfdual;

pub use error::{Error, Result};
pub use gnl::{Gnl, MinorMode};
pub use ground::{ground, GroundSet, LabeledMatrix, LabeledVector};
pub use rat::{Int, Rat};
