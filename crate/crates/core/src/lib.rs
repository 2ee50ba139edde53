//! Exact verification of determinantal character identities for classical
//! groups.
//!
//! Everything is computed over a truncated ring of symmetric polynomials with
//! arbitrary-precision integer coefficients: Weyl groups with exact Coxeter
//! lengths, BGG-type complex terms, closed-form determinants over the
//! character ring, and an independent highest-weight decomposition oracle.

pub mod charring;
pub mod engine;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod symfunc;
pub mod weyl;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("non-exact division at term {term}")]
    NonExactDivision { term: String },
    #[error("odd coefficient at {term}: cannot halve exactly")]
    OddCoefficient { term: String },
    #[error("determinant input is not square: {rows} rows, {cols} cols")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("degree caps mismatch between ring elements")]
    CapsMismatch,
    #[error("input is not symmetric in alphabet {alphabet}: leading exponents {exps:?}")]
    NotSymmetric { alphabet: String, exps: Vec<i32> },
    #[error("weight {0:?} is not admissible for this case")]
    InadmissibleWeight(Vec<i64>),
    #[error("weight {0:?} is not dominant")]
    NonDominantWeight(Vec<i64>),
    #[error("Weyl group order {order} exceeds enumeration bound {bound}")]
    WeylBoundExceeded { order: u64, bound: u64 },
    #[error("character decomposition failed: {0}")]
    Decomposition(String),
    #[error("faithfulness violation: alphabet {alphabet} has {size} variables but degree cap is {cap}")]
    Unfaithful { alphabet: String, size: usize, cap: i64 },
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
