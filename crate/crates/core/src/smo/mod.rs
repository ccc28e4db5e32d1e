//! Experiments around strong multiplicity one: local comparison, pole-order
//! proxies, the Z ratio, Rajan's summability test, inert-prime abscissae and
//! degree towers.

pub mod compare;
pub mod hecke;
pub mod inert;
pub mod pole;
pub mod rajan;
pub mod tau;
pub mod tower;
pub mod zratio;

use thiserror::Error;

use crate::euler::EulerError;
use crate::primes::PrimesError;

pub use compare::{compare_local, AgreementReport, Threshold};
pub use hecke::{bundled_tau, load_hecke, parse_hecke, synthetic_tempered, synthetic_with_profile, DataSource, RepresentationData};
pub use inert::{inert_experiment, InertReport};
pub use pole::{pole_order_estimate, pole_cutoff, tempered_bound_check, PoleOrderEstimate, TemperedBoundReport, DEFAULT_EPS_GRID};
pub use rajan::{rajan_criterion, RajanReport, RajanVerdict};
pub use tau::{generate_tau, tau_csv, tau_series};
pub use tower::{tower_degree_check, TowerReport};
pub use zratio::{z_ratio, ZRatioReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SmoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {p} is not prime")]
    NonPrimeRow { line: usize, p: u64 },
    #[error("line {line}: prime {p} appears twice")]
    DuplicatePrime { line: usize, p: u64 },
    #[error("limit exceeded: {value} > {limit}")]
    LimitExceeded { value: u64, limit: u64 },
    #[error("degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("epsilon {eps} needs a cutoff beyond the prime limit")]
    InfeasibleEpsilon { eps: f64 },
    #[error("parameter of size {abs} at p = {p} exceeds q^(1/2)")]
    NotTempered { p: u64, abs: f64 },
    #[error("field degree {0} is not prime")]
    NotPrimeDegree(u32),
    #[error("fields are not nested: {reason}")]
    NotNested { reason: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error(transparent)]
    Euler(#[from] EulerError),
    #[error(transparent)]
    Primes(#[from] PrimesError),
}
