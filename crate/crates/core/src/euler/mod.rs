//! Local L-factors from Satake parameters, Euler products, log expansions
//! and abscissa arithmetic.

pub mod abscissa;
pub mod expansion;
pub mod local;
pub mod product;

use thiserror::Error;

use crate::primes::PrimesError;

pub use abscissa::{
    convergence_probe, grc_profile, key_observation_abscissa, key_observation_abscissa_exact,
    GrcProfile, Growth, ProbeReport,
};
pub use expansion::{landau_region_check, log_expansion, positive_type_check, LogExpansion};
pub use local::{rankin_selberg_local, rs_leading_coefficient, LocalFactor, RsLeading};
pub use product::EulerProduct;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EulerError {
    #[error("pole hit at parameter {0}")]
    PoleHit(usize),
    #[error("norms differ: {left} vs {right}")]
    NormMismatch { left: f64, right: f64 },
    #[error("invalid local factor: {0}")]
    InvalidFactor(String),
    #[error("limit exceeded: {value} > {limit}")]
    LimitExceeded { value: u64, limit: u64 },
    #[error("coefficient at n = {index} violates positivity")]
    NotPositiveType { index: u64 },
    #[error("unknown bound profile {0:?}")]
    UnknownProfile(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {p} is not prime")]
    NonPrimeRow { line: usize, p: u64 },
    #[error("line {line}: prime {p} appears twice")]
    DuplicatePrime { line: usize, p: u64 },
    #[error(transparent)]
    Primes(#[from] PrimesError),
}
