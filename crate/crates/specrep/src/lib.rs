//! Exact eigenvalue spectra of permutations in irreducible representations
//! of the symmetric and alternating groups.
//!
//! For an irreducible representation `rho` of `S_n` (indexed by a partition
//! `lambda`) and a permutation `sigma` (indexed by its cycle type `mu`), every
//! eigenvalue of `rho(sigma)` is an `o`-th root of unity, `o` the order of
//! `sigma`. This crate computes the eigenvalue set and the minimal polynomial
//! of `rho(sigma)` along three independent routes:
//!
//! * [`classifier`] — a closed-form case analysis over `(lambda, mu)`;
//! * [`spectrum::spectrum_oracle`] — eigenspace dimensions as exact character
//!   inner products over a cyclotomic field;
//! * [`spectrum::spectrum_via_lr`] — recursive evaluation through
//!   Littlewood–Richardson restriction.
//!
//! The alternating groups are covered as well, including the split conjugacy
//! classes and the split characters `chi^+/chi^-` with their surd values.
//! All arithmetic is exact: integers, rationals, and canonical-form elements
//! of cyclotomic fields. No floating point is used anywhere.
//!
//! ```
//! use specrep::classifier::classify_sn;
//! use specrep::partitions::{CycleType, Partition};
//!
//! let lambda = Partition::parse("4,1")?;
//! let mu = CycleType::parse("5")?;
//! let result = classify_sn(&lambda, &mu)?;
//! assert_eq!(result.minpoly().display(), "(x^5-1)/(x-1)");
//! # Ok::<(), specrep::Error>(())
//! ```

pub mod characters;
pub mod classifier;
pub mod cyclotomic;
pub mod lr;
pub mod partitions;
pub mod spectrum;

use thiserror::Error;

/// Errors shared across the crate's modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: |lambda| = {lambda} but |mu| = {mu}")]
    SizeMismatch { lambda: usize, mu: usize },

    #[error("empty partition has no corners")]
    NoCorners,

    #[error("inner shape does not fit in outer shape")]
    InnerNotContained,

    #[error("content size {content} does not match shape size {cells}")]
    ContentSizeMismatch { cells: usize, content: usize },

    #[error("cycle type {0} does not split in the alternating group")]
    NotSplitClass(String),

    #[error("split sign required: class {0} splits in the alternating group")]
    SplitSignRequired(String),

    #[error("split sign not allowed: {0}")]
    SplitSignNotAllowed(String),

    #[error("cycle type {0} has odd sign, not an alternating group class")]
    OddClass(String),

    #[error("the trivial character is excluded")]
    TrivialCharacter,

    #[error("conductor {from} does not divide {to}")]
    ConductorNotDivisible { from: u64, to: u64 },

    #[error("empty exponent set has no minimal polynomial")]
    EmptyExponentSet,

    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
