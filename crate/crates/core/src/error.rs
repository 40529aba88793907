use thiserror::Error;

/// Errors produced by the engine.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Cartan matrix violates a structural invariant (diagonal, sign,
    /// symmetry-of-zeros, or disagreement with the named series).
    #[error("malformed Cartan matrix: {0}")]
    MalformedCartanMatrix(String),

    /// Root closure exceeded the configured bound, so the Cartan datum does
    /// not define a finite group.
    #[error("root closure exceeded {limit} roots; the Cartan datum does not generate a finite root system")]
    NonFiniteType { limit: usize },

    /// Index outside the valid range for the collection it addresses.
    #[error("index {index} out of range, {len} entries available")]
    IndexOutOfRange { index: usize, len: usize },

    /// Group enumeration grew past the configured order bound.
    #[error("group enumeration exceeded the order bound {bound}")]
    GroupTooLarge { bound: u64 },

    /// Operation is only defined for series-A root systems.
    #[error("operation requires a series-A root system")]
    NotTypeA,

    /// Elements from different root systems were combined.
    #[error("elements belong to different root systems")]
    MixedSystems,

    /// Pattern has more letters than the permutation it is matched against.
    #[error("pattern of length {pattern} cannot occur in a permutation of length {perm}")]
    PatternLongerThanPermutation { pattern: usize, perm: usize },

    /// Partition parts for the induction predictor must be positive.
    #[error("partition parts must be positive, got ({n1}, {n2})")]
    NonPositivePartition { n1: i64, n2: i64 },

    /// Realization degree outside `0..=2N`.
    #[error("degree {degree} outside the valid range 0..={max}")]
    DegreeOutOfRange { degree: u64, max: u64 },

    /// One-line data is not a bijection on `{1..m}`.
    #[error("invalid one-line notation: {0}")]
    MalformedPermutation(String),

    /// Word string does not parse as comma-separated generator indices.
    #[error("cannot parse word {0:?}: expected \"e\" or comma-separated 1-based generator indices")]
    MalformedWord(String),

    /// System spec string does not parse as a series name or Cartan matrix.
    #[error("cannot parse system spec {0:?}")]
    MalformedSystemSpec(String),

    /// Weight coordinate list does not parse as exact rationals.
    #[error("cannot parse weight coordinates {0:?}")]
    MalformedWeight(String),
}
