//! Combinatorial engine for the orbit structure of full complex flag spaces.
//!
//! For a connected complex reductive group, both the real-group orbits and the
//! symmetric-subgroup orbits on the full flag space are indexed by the Weyl
//! group, with Matsuki duality matching the two families and reversing closure
//! order. This crate computes the decidable bookkeeping attached to that
//! picture:
//!
//! - root systems generated from Cartan matrices ([`rootdata`]),
//! - Weyl group elements with canonical reduced words ([`coxeter`]),
//! - Bruhat order, lower intervals and their Poincaré coefficients ([`bruhat`]),
//! - smoothness of the associated Schubert-type varieties, in type A via
//!   pattern avoidance ([`schubert`]),
//! - orbit dimensions, vanishing numbers, parabolicity and realization
//!   verdicts ([`orbits`]).
//!
//! Everything is exact: weights are rational, counts are arbitrary-precision
//! integers, and no floating point appears anywhere. All values are immutable
//! after construction and safe to share across threads.

pub mod bruhat;
pub mod coxeter;
mod error;
pub mod orbits;
pub mod rootdata;
pub mod schubert;

pub use bruhat::BruhatInterval;
pub use coxeter::{CoxeterElement, GeneratorSet, Side, WeylGroup};
pub use error::Error;
pub use orbits::{
    ClassificationRecord, InductionPrediction, OrbitDescriptor, RealizationDescriptor, Region,
    Smoothness, Verdict,
};
pub use rootdata::{CartanDatum, RootSystem, Series, Weight};
pub use schubert::{Pattern, Permutation};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Version string baked into cache keys so stale entries from older
/// algorithm revisions are never read back.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
