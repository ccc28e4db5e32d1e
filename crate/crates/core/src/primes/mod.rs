//! Prime enumeration, abelian fields as congruence data, prime selectors and
//! density estimates.

pub mod density;
pub mod field;
pub mod selector;
pub mod sieve;

use thiserror::Error;

pub use density::{
    dirichlet_density_estimate, frobenius_statistics, natural_density_estimate, prime_zeta,
    Counting, DensityEstimate, Estimand, FrobeniusStats, PrimeZeta,
};
pub use field::FieldSpec;
pub use selector::{parse_selector_expr, selector_from_str, PrimeItem, PrimeSelector, SelectorExpr};
pub use sieve::{map_segments, prime_count, primes_up_to};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PrimesError {
    #[error("limit exceeded: {x} > {limit}")]
    LimitExceeded { x: u64, limit: u64 },
    #[error("{p} is ramified (divides {modulus})")]
    Ramified { p: u64, modulus: u64 },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid selector: {0}")]
    Selector(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}
