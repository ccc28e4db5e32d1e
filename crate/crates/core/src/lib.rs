//! Character-theoretic, prime-density and Euler-product tools for
//! multiplicity-one questions.

pub mod euler;
pub mod groups;
pub mod numeric;
pub mod primes;
pub mod report;
pub mod smo;
