use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation image array: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("element set is not a group: {0}")]
    NotAGroup(String),
    #[error("weights must satisfy r1 + r2 = {expected}, got ({r1}, {r2})")]
    InvalidWeight {
        r1: usize,
        r2: usize,
        expected: usize,
    },
    #[error("invalid partition: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("character map is not a homomorphism into the complex units: {0}")]
    NotAHomomorphism(String),
    #[error("state vector mixes weight sectors")]
    MixedWeight,
    #[error("state vector is zero")]
    ZeroVector,
    #[error("input vectors are linearly dependent")]
    DependentVectors,
    #[error("missing Fourier block for partition {0}")]
    MissingBlock(String),
    #[error("Fourier block for partition {partition} has side {got}, expected {want}")]
    BlockShape {
        partition: String,
        got: usize,
        want: usize,
    },
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("value {0} is not an eigenvalue of the sector")]
    NotAnEigenvalue(String),
    #[error("exact reconstruction produced an inconsistent eigenpair: {0}")]
    Reconstruction(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("invalid spin configuration: {0}")]
    InvalidConfig(String),
    #[error("sites out of range: {0}")]
    SitesOutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
