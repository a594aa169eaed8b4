//! Computational toolkit for the universal virtual braid groups `UV_n(c)`.
//!
//! The word problem is solved through the split extension
//! `UV_n(c) = KUV_n(c) ⋊ S_n`, where `KUV_n(c)` is the right-angled Artin
//! group on the δ_{i,j,t} generators with commutation exactly between
//! disjoint strand pairs.

pub mod claims;
pub mod error;
pub mod exec;
pub mod homs;
pub mod oracle;
pub mod perms;
pub mod quotients;
pub mod raag;
pub mod random;
pub mod semidirect;
pub mod words;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use exec::Execution;
pub use perms::Perm;
pub use raag::{CommGraph, Delta, DeltaWord};
pub use semidirect::{UVNormalForm, WordProblem};
pub use words::{Letter, Params, Sign, UVWord};

/// Version of the JSON documents emitted by the CLI and the claim report.
pub const SCHEMA_VERSION: u32 = 1;
