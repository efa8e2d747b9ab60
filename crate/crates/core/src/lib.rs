//! Exact combinatorics of the centralizer algebra of the symmetric group
//! `S_n` acting by value relabeling on the commutative tensor power
//! `V^⊠k` (the space whose basis is indexed by multisets of size `k` with
//! values in `{1..n}`, i.e. by integer partitions of length `k` with parts
//! at most `n`).
//!
//! The crate provides:
//!
//! - [`partitions`]: integer partitions, conjugation, constrained and
//!   unconstrained enumeration;
//! - [`boxspace`]: the multiset basis of `V^⊠k`, the value action of `S_n`,
//!   the (trivial) place action of `S_k`, and sparse integer endomorphisms
//!   with matrix units;
//! - [`centralizer`]: the orbit equivalence on basis-index pairs, orbit-sum
//!   elements, the generator-based centralizer membership test, the orbit
//!   basis, and structure constants;
//! - [`diagrams`]: set-partitions of `{1..k, 1'..k'}`, their block-shape
//!   canonical form, the component-label matrix, and the class-level
//!   bijection onto orbit classes;
//! - [`dimension`]: a closed matching-based counting formula and a
//!   three-way dimension cross-check;
//! - [`checks`]: reusable verification routines backing the CLI `verify`
//!   subcommand and the test suites.
//!
//! All coefficient arithmetic is exact (`num_bigint::BigInt`); all counting
//! is exact (`num_bigint::BigUint`). Every value is immutable after
//! construction and every operation is a pure function, so everything here
//! is safe to use concurrently.

pub mod boxspace;
pub mod centralizer;
pub mod checks;
pub mod diagrams;
pub mod dimension;
pub mod partitions;

pub use boxspace::{box_dimension, place_act, value_act, BoxBasis, SparseEndo, ValuePermutation};
pub use centralizer::{
    canonical_pair_shape, dimension_by_orbits, expand_in_orbit_basis, is_centralized, orbit_basis,
    orbit_sum, structure_constants, OrbitBasisElement, PairShape,
};
pub use diagrams::{
    diagram_realizing_pair, enumerate_block_shapes, enumerate_set_partitions, BlockShapeMultiset,
    SetPartitionDiagram,
};
pub use dimension::{dimension_crosscheck, dimension_formula, DimensionReport};
pub use partitions::{
    enumerate_constrained, enumerate_partitions_of, Partition, PartitionConstraint,
};

use thiserror::Error;

/// Errors produced by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A partition must have at least one part.
    #[error("partition must be nonempty")]
    EmptyPartition,
    /// Partition parts are positive integers.
    #[error("partition parts must be positive, got 0")]
    ZeroPart,
    /// A part exceeded the maximum value allowed by a constraint.
    #[error("part {part} exceeds the maximum allowed value {max}")]
    PartTooLarge { part: u32, max: u32 },
    /// A partition had the wrong length for a constraint.
    #[error("partition has length {actual}, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    /// A constraint with k = 0 or n = 0 is invalid.
    #[error("constraint requires k >= 1 and n >= 1")]
    InvalidConstraint,
    /// A sequence of images did not describe a permutation.
    #[error("images do not form a permutation of 1..={0}")]
    NotAPermutation(usize),
    /// Two endomorphisms with different (k, n) cannot be combined.
    #[error("constraint mismatch: (k={0}, n={1}) vs (k={2}, n={3})")]
    ConstraintMismatch(usize, u32, usize, u32),
    /// An endomorphism expected to be constant on orbit classes was not.
    /// Returned by orbit-basis expansion; a sound centralizer element can
    /// never trigger it.
    #[error("coefficients not constant on the orbit class of ({row}, {col})")]
    OrbitInconsistency { row: String, col: String },
    /// Set-partition enumeration was asked to exceed its ceiling.
    #[error(
        "set-partition enumeration is capped at k <= {max} (Bell(2k) growth); \
         use the class-level enumerator instead"
    )]
    EnumerationTooLarge { k: usize, max: usize },
    /// A diagram's blocks were not a set-partition of {1..k, 1'..k'}.
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    /// An operation requiring the stable range 2k <= n was called outside it.
    #[error("requires the stable range 2k <= n, got k={k}, n={n}")]
    StableRangeRequired { k: usize, n: u32 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
